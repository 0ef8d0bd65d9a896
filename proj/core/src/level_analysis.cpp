#include "pumpkit/level_analysis.hpp"

#include <algorithm>
#include <string>

namespace pumpkit {

bool is_level_triple(Profile s, const LevelTriple& t)
{
    if (!(t.i < t.j && t.j < t.k && t.k < s.size()))
        return false;
    if (t.n == 0 || s[t.i] != s[t.k] || s[t.j] != s[t.i] + t.n)
        return false;
    for (std::size_t m = t.i; m <= t.j; ++m)
        if (s[m] < s[t.i] || s[m] > s[t.j])
            return false;
    for (std::size_t m = t.j; m <= t.k; ++m)
        if (s[m] < s[t.i] || s[m] > s[t.j])
            return false;
    return true;
}

LevelResult max_level(Profile s, std::size_t windowEnd)
{
    LevelResult best;
    if (s.empty())
        return best;
    const std::size_t last = std::min(windowEnd, s.size() - 1);
    for (std::size_t i = 0; i < last; ++i) {
        const std::size_t base = s[i];
        std::size_t peak = base;
        std::size_t peakAt = i;
        for (std::size_t m = i + 1; m <= last; ++m) {
            if (s[m] < base)
                break;
            if (s[m] > peak) {
                peak = s[m];
                peakAt = m;
            }
            if (s[m] == base && peak - base > best.level) {
                best.level = peak - base;
                best.witness = LevelTriple{i, peakAt, m, best.level};
            }
        }
    }
    return best;
}

LevelResult brute_force_max_level(Profile s, std::size_t windowEnd)
{
    LevelResult best;
    if (s.empty())
        return best;
    const std::size_t last = std::min(windowEnd, s.size() - 1);
    for (std::size_t i = 0; i <= last; ++i) {
        for (std::size_t j = i + 1; j <= last; ++j) {
            if (s[j] <= s[i])
                continue;
            const std::size_t n = s[j] - s[i];
            if (n <= best.level)
                continue;
            bool rising = true;
            for (std::size_t m = i; m <= j && rising; ++m)
                rising = s[i] <= s[m] && s[m] <= s[j];
            if (!rising)
                continue;
            for (std::size_t k = j + 1; k <= last; ++k) {
                if (s[k] != s[i])
                    continue;
                bool falling = true;
                for (std::size_t m = j; m <= k && falling; ++m)
                    falling = s[i] <= s[m] && s[m] <= s[j];
                if (falling) {
                    best = {n, LevelTriple{i, j, k, n}};
                    break;
                }
            }
        }
    }
    return best;
}

namespace {

void check_height(Profile s, const LevelTriple& t, std::size_t h)
{
    if (t.k >= s.size() || t.j >= s.size() || t.i >= s.size())
        throw LevelError("level triple lies outside the profile");
    if (h < s[t.i] || h > s[t.j])
        throw LevelError("height " + std::to_string(h) + " outside [" + std::to_string(s[t.i]) + ", " +
                         std::to_string(s[t.j]) + "]");
}

} // namespace

std::size_t last_push(Profile s, const LevelTriple& t, std::size_t h)
{
    check_height(s, t, h);
    for (std::size_t y = t.j + 1; y-- > 0;)
        if (s[y] == h)
            return y;
    throw LevelError("no position at height " + std::to_string(h) + " before the peak");
}

std::size_t first_pop(Profile s, const LevelTriple& t, std::size_t h)
{
    check_height(s, t, h);
    for (std::size_t y = t.j; y < s.size(); ++y)
        if (s[y] == h)
            return y;
    throw LevelError("no position at height " + std::to_string(h) + " after the peak");
}

LevelTriple extract_sublevel(Profile s, const LevelTriple& t, std::size_t target)
{
    if (target == 0 || target > t.n)
        throw LevelError("sublevel " + std::to_string(target) + " not within level " + std::to_string(t.n));
    const std::size_t floor = s[t.j] - target;
    return {last_push(s, t, floor), t.j, first_pop(s, t, floor), target};
}

PathTrace::PathTrace(const RunPath& path)
{
    nodes_.push_back({SymbolId::blank(), kEmpty, 0});
    std::size_t top = kEmpty;
    for (SymbolId sym : path.initialStack) {
        nodes_.push_back({sym, top, nodes_[top].height + 1});
        top = nodes_.size() - 1;
    }
    stackAt_.reserve(path.positions());
    states_.reserve(path.positions());
    stackAt_.push_back(top);
    states_.push_back(path.initialState);
    for (const auto& t : path.steps) {
        if (t.extra) {
            nodes_.push_back({*t.extra, top, nodes_[top].height + 1});
            top = nodes_.size() - 1;
        } else {
            top = nodes_[top].below;
        }
        stackAt_.push_back(top);
        states_.push_back(t.to);
    }
}

std::size_t PathTrace::height_at(std::size_t pos) const { return nodes_[stackAt_.at(pos)].height; }

SymbolId PathTrace::top_at(std::size_t pos) const { return nodes_[stackAt_.at(pos)].symbol; }

Configuration PathTrace::configuration_at(std::size_t pos, std::size_t depth) const
{
    Configuration c{states_.at(pos), {}};
    c.topStack.reserve(depth);
    std::size_t n = stackAt_.at(pos);
    for (std::size_t d = 0; d < depth; ++d) {
        c.topStack.push_back(nodes_[n].symbol); // blank once n == kEmpty
        n = nodes_[n].below;
    }
    return c;
}

Configuration configuration_at(const RunPath& path, std::size_t pos, std::size_t depth)
{
    return PathTrace(path).configuration_at(pos, depth);
}

FullState full_state(const PathTrace& trace, Profile profile, const LevelTriple& triple, std::size_t h)
{
    if (h == 0)
        throw LevelError("full state needs a nonempty stack (h >= 1)");
    const auto lp = last_push(profile, triple, h);
    const auto fp = first_pop(profile, triple, h);
    const auto top = trace.top_at(lp);
    if (trace.top_at(fp) != top)
        throw LevelError("top-symbol-mismatch: stack top differs between lp(" + std::to_string(h) + ")=" +
                         std::to_string(lp) + " and fp(" + std::to_string(h) + ")=" + std::to_string(fp));
    return {trace.state_at(lp), top, trace.state_at(fp)};
}

FullState full_state(const RunPath& path, const LevelTriple& triple, std::size_t h)
{
    return full_state(PathTrace(path), path.profile, triple, h);
}

} // namespace pumpkit
