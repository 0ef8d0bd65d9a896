#include "pumpkit/chart.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pumpkit {

namespace {

struct Span {
    char label;
    std::size_t from; ///< path positions, half-open
    std::size_t to;
};

std::optional<LevelTriple> annotated_triple(const Extraction& e)
{
    if (const auto* c2 = std::get_if<Case2Witness>(&e.decomposition.witness))
        return c2->triple;
    return e.diagnostics.level.witness;
}

std::vector<Span> spans_of(const Extraction& e, std::size_t positions)
{
    const auto& d = e.decomposition;
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness))
        return {{'u', 0, c1->i}, {'v', c1->i, c1->j}, {'x', c1->j, positions}};
    const auto& c2 = std::get<Case2Witness>(d.witness);
    return {{'u', 0, c2.lpG}, {'v', c2.lpG, c2.lpH}, {'x', c2.lpH, c2.fpH}, {'y', c2.fpH, c2.fpG},
            {'z', c2.fpG, positions}};
}

std::vector<std::pair<std::size_t, char>> cut_markers(const Extraction& e)
{
    if (const auto* c1 = std::get_if<Case1Witness>(&e.decomposition.witness))
        return {{c1->i, '['}, {c1->j, ']'}};
    const auto& c2 = std::get<Case2Witness>(e.decomposition.witness);
    return {{c2.lpG, 'g'}, {c2.lpH, 'h'}, {c2.fpH, 'h'}, {c2.fpG, 'g'}};
}

std::string quoted(const Word& w)
{
    constexpr std::size_t kMax = 40;
    if (w.size() <= kMax)
        return "\"" + encode_utf8(w) + "\"";
    return "\"" + encode_utf8(w.substr(0, kMax)) + "…\" (" + std::to_string(w.size()) + " letters)";
}

std::string legend(const Extraction& e)
{
    std::ostringstream os;
    const auto& d = e.decomposition;
    if (auto t = annotated_triple(e))
        os << "level triple (i,j,k) = (" << t->i << "," << t->j << "," << t->k << "), n = " << t->n << "\n";
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness)) {
        os << "Case1: configuration repeat at [ = " << c1->i << ", ] = " << c1->j << " (depth " << c1->depth
           << ")\n";
    } else {
        const auto& c2 = std::get<Case2Witness>(d.witness);
        os << "Case2: (g,h) = (" << c2.g << "," << c2.h << "), lp(g)=" << c2.lpG << " lp(h)=" << c2.lpH
           << " fp(h)=" << c2.fpH << " fp(g)=" << c2.fpG << "\n";
    }
    os << "u=" << quoted(d.u) << " v=" << quoted(d.v) << " x=" << quoted(d.x) << " y=" << quoted(d.y)
       << " z=" << quoted(d.z) << "\n";
    return os.str();
}

} // namespace

std::string render_ascii(const RunPath& path, const Extraction* annotation, ChartOptions options)
{
    const auto& s = path.profile;
    const std::size_t n = s.size();
    const std::size_t cols = std::max<std::size_t>(1, std::min(n, options.maxColumns));
    auto column_start = [&](std::size_t c) { return c * n / cols; };
    auto column_of = [&](std::size_t pos) {
        std::size_t c = pos * cols / n;
        while (c + 1 < cols && column_start(c + 1) <= pos)
            ++c;
        while (c > 0 && column_start(c) > pos)
            --c;
        return c;
    };

    std::vector<std::size_t> pooled(cols, 0);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t m = column_start(c); m < column_start(c + 1); ++m)
            pooled[c] = std::max(pooled[c], s[m]);

    const std::size_t maxH = n ? *std::max_element(s.begin(), s.end()) : 0;
    const std::size_t rows = std::min(maxH, std::max<std::size_t>(1, options.maxRows));
    const std::size_t labelWidth = std::to_string(maxH).size();

    std::ostringstream os;
    os << "stack profile: " << n << " positions, max height " << maxH;
    if (cols < n)
        os << ", " << cols << " columns (max-pooled)";
    os << "\n";
    for (std::size_t r = rows; r >= 1; --r) {
        const std::size_t threshold = (r * maxH + rows - 1) / rows;
        std::string line(cols, ' ');
        for (std::size_t c = 0; c < cols; ++c)
            if (pooled[c] >= threshold)
                line[c] = '#';
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << std::setw(static_cast<int>(labelWidth)) << threshold << " |" << line << "\n";
    }
    os << std::setw(static_cast<int>(labelWidth)) << 0 << " +" << std::string(cols, '-') << "\n";

    const std::string indent(labelWidth + 2, ' ');
    std::string ticks(cols, ' ');
    for (std::size_t c = 0; c < cols; c += 10) {
        const auto label = std::to_string(column_start(c));
        if (c + label.size() <= cols)
            ticks.replace(c, label.size(), label);
    }
    while (!ticks.empty() && ticks.back() == ' ')
        ticks.pop_back();
    os << indent << ticks << "\n";

    if (annotation) {
        auto row = [&](const std::string& body, const std::string& name) {
            std::string text = body;
            while (!text.empty() && text.back() == ' ')
                text.pop_back();
            os << indent << text << "  " << name << "\n";
        };
        if (auto t = annotated_triple(*annotation)) {
            std::string marks(cols, ' ');
            marks[column_of(t->i)] = 'i';
            marks[column_of(t->j)] = 'j';
            marks[column_of(t->k)] = 'k';
            row(marks, "level");
        }
        std::string cuts(cols, ' ');
        for (const auto& [pos, mark] : cut_markers(*annotation))
            cuts[column_of(pos)] = mark;
        row(cuts, "cuts");
        std::string spans(cols, ' ');
        for (const auto& sp : spans_of(*annotation, n))
            for (std::size_t m = sp.from; m < sp.to && m < n; ++m)
                spans[column_of(m)] = sp.label;
        row(spans, "spans");
        if (cols == n) {
            std::string letters;
            letters.push_back(' ');
            for (std::size_t m = 1; m < n; ++m)
                letters += path.steps[m - 1].input ? encode_utf8(*path.steps[m - 1].input) : std::string(".");
            row(letters, "input");
        }
        os << legend(*annotation);
    }
    return os.str();
}

namespace {

std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string render_svg(const RunPath& path, const Extraction* annotation)
{
    constexpr double kWidth = 1000, kHeight = 460, kLeft = 50, kRight = 20, kTop = 20, kPlotBottom = 340;
    const auto& s = path.profile;
    const std::size_t n = s.size();
    const std::size_t maxH = std::max<std::size_t>(1, n ? *std::max_element(s.begin(), s.end()) : 1);
    const double dx = (kWidth - kLeft - kRight) / static_cast<double>(std::max<std::size_t>(1, n - 1));
    const double dy = (kPlotBottom - kTop) / static_cast<double>(maxH);
    auto x = [&](std::size_t pos) { return kLeft + dx * static_cast<double>(pos); };
    auto y = [&](std::size_t h) { return kPlotBottom - dy * static_cast<double>(h); };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
       << "  <title>stack profile (" << n << " positions)</title>\n"
       << "  <line x1=\"" << kLeft << "\" y1=\"" << kPlotBottom << "\" x2=\"" << kWidth - kRight << "\" y2=\""
       << kPlotBottom << "\" stroke=\"#444\"/>\n"
       << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kPlotBottom
       << "\" stroke=\"#444\"/>\n"
       << "  <text x=\"" << kLeft - 8 << "\" y=\"" << y(maxH) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
       << maxH << "</text>\n"
       << "  <text x=\"" << kLeft - 8 << "\" y=\"" << kPlotBottom + 4
       << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";

    os << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t m = 0; m < n; ++m)
        os << (m ? " " : "") << x(m) << "," << y(s[m]);
    os << "\"/>\n";

    if (annotation) {
        if (auto t = annotated_triple(*annotation)) {
            for (auto [pos, name] : {std::pair{t->i, "i"}, std::pair{t->j, "j"}, std::pair{t->k, "k"}}) {
                os << "  <line x1=\"" << x(pos) << "\" y1=\"" << kTop << "\" x2=\"" << x(pos) << "\" y2=\""
                   << kPlotBottom << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n"
                   << "  <text x=\"" << x(pos) << "\" y=\"" << kTop - 6 << "\" text-anchor=\"middle\" font-size=\"11\">"
                   << name << "=" << pos << "</text>\n";
            }
        }
        if (const auto* c2 = std::get_if<Case2Witness>(&annotation->decomposition.witness)) {
            for (auto [h, name] : {std::pair{c2->g, "g"}, std::pair{c2->h, "h"}}) {
                os << "  <line x1=\"" << kLeft << "\" y1=\"" << y(h) << "\" x2=\"" << kWidth - kRight << "\" y2=\""
                   << y(h) << "\" stroke=\"#d62728\" stroke-dasharray=\"2 2\"/>\n"
                   << "  <text x=\"" << kWidth - kRight << "\" y=\"" << y(h) - 3
                   << "\" text-anchor=\"end\" font-size=\"11\" fill=\"#d62728\">" << name << "=" << h << "</text>\n";
            }
        }
        static constexpr const char* kFill[] = {"#e8e8e8", "#ffbb78", "#c7e9c0", "#aec7e8", "#e8e8e8"};
        const auto spans = spans_of(*annotation, n);
        for (std::size_t idx = 0; idx < spans.size(); ++idx) {
            const auto& sp = spans[idx];
            const double x0 = x(sp.from);
            const double x1 = x(std::min(sp.to, n - 1));
            os << "  <rect x=\"" << x0 << "\" y=\"" << kPlotBottom + 20 << "\" width=\"" << std::max(0.0, x1 - x0)
               << "\" height=\"24\" fill=\"" << kFill[idx % 5] << "\" stroke=\"#666\"/>\n"
               << "  <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kPlotBottom + 36
               << "\" text-anchor=\"middle\" font-size=\"12\">" << sp.label << "</text>\n";
        }
        std::istringstream lines(legend(*annotation));
        std::string line;
        double ly = kPlotBottom + 60;
        for (; std::getline(lines, line); ly += 14)
            os << "  <text x=\"" << kLeft << "\" y=\"" << ly << "\" font-size=\"11\">" << xml_escape(line)
               << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace pumpkit
