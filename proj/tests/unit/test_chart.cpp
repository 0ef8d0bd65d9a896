#include <doctest.h>

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "pumpkit/chart.hpp"
#include "pumpkit/corpus.hpp"

using namespace pumpkit;

namespace {

RunPath path_for(const std::string& name, const Word& w)
{
    auto out = minimal_accepting_path(normalize(builtin(name).pda), w, SearchLimits::defaults(w.size()));
    REQUIRE(std::holds_alternative<RunPath>(out));
    return std::get<RunPath>(std::move(out));
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

boost::property_tree::ptree parse_xml(const std::string& text)
{
    std::istringstream in(text);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return tree;
}

std::size_t count_children(const boost::property_tree::ptree& svg, const std::string& tag)
{
    std::size_t n = 0;
    for (const auto& child : svg)
        n += child.first == tag;
    return n;
}

} // namespace

TEST_CASE("ASCII golden: plain profile")
{
    const auto chart = render_ascii(path_for("REG_AB", U"abab"));
    CHECK(chart == "stack profile: 5 positions, max height 2\n"
                   "2 | # #\n"
                   "1 |#####\n"
                   "0 +-----\n"
                   "   0\n");
}

TEST_CASE("ASCII golden: annotated DYCK1 decomposition")
{
    const auto e = extract(normalize(builtin("DYCK1").pda), U"(((())))", ExtractionMode::BestEffort);
    const auto chart = render_ascii(e.path, &e);
    CHECK(chart == "stack profile: 10 positions, max height 5\n"
                   "5 |    #\n"
                   "4 |   ###\n"
                   "3 |  #####\n"
                   "2 | #######\n"
                   "1 |#########\n"
                   "0 +----------\n"
                   "   0\n"
                   "   i   j   k  level\n"
                   "    gh   hg  cuts\n"
                   "   uvxxxxyzzz  spans\n"
                   "    (((()))).  input\n"
                   "level triple (i,j,k) = (0,4,8), n = 4\n"
                   "Case2: (g,h) = (2,3), lp(g)=1 lp(h)=2 fp(h)=6 fp(g)=7\n"
                   "u=\"(\" v=\"(\" x=\"(())\" y=\")\" z=\")\"\n");
}

TEST_CASE("long profiles are max-pooled and scaled")
{
    const auto w = generate("DYCK1", 1000);
    const auto path = path_for("DYCK1", w);
    const auto chart = render_ascii(path);
    const auto lines = lines_of(chart);
    CHECK(lines[0] == "stack profile: 2002 positions, max height 1001, 400 columns (max-pooled)");
    // 24 height rows, axis, ticks
    REQUIRE(lines.size() == 1 + 24 + 2);
    CHECK(lines[1].rfind("1001 |", 0) == 0);
    for (std::size_t r = 1; r <= 24; ++r)
        CHECK(lines[r].size() <= 6 + 400);
    CHECK(lines[25] == "   0 +" + std::string(400, '-'));
    // The peak column survives pooling.
    CHECK(lines[1].find('#') != std::string::npos);

    ChartOptions narrow;
    narrow.maxColumns = 50;
    narrow.maxRows = 5;
    const auto small = lines_of(render_ascii(path, nullptr, narrow));
    CHECK(small.size() == 1 + 5 + 2);
}

TEST_CASE("SVG is well-formed XML with one polyline point per position")
{
    const auto e = extract(normalize(builtin("DYCK1").pda), U"(((())))", ExtractionMode::BestEffort);
    const auto tree = parse_xml(render_svg(e.path, &e));
    const auto& svg = tree.get_child("svg");
    CHECK(svg.get<std::string>("<xmlattr>.xmlns") == "http://www.w3.org/2000/svg");
    const auto points = svg.get<std::string>("polyline.<xmlattr>.points");
    std::istringstream in(points);
    std::size_t n = 0;
    for (std::string p; in >> p;)
        ++n;
    CHECK(n == 10);
    CHECK(count_children(svg, "rect") == 5);
    CHECK(count_children(svg, "text") >= 3 + 5 + 3);

    const auto plain = parse_xml(render_svg(path_for("REG_AB", U"abab")));
    CHECK(count_children(plain.get_child("svg"), "rect") == 0);
}

TEST_CASE("SVG for a Case 1 annotation has three spans")
{
    const auto e = extract(normalize(builtin("REG_AB").pda), U"abab", ExtractionMode::BestEffort);
    const auto svg = render_svg(e.path, &e);
    CHECK(svg.find("&quot;ab&quot;") != std::string::npos);
    CHECK(count_children(parse_xml(svg).get_child("svg"), "rect") == 3);
}
