#pragma once

#include <string>

#include "pumpkit/pump_extractor.hpp"

namespace pumpkit {

struct ChartOptions {
    std::size_t maxColumns = 400; ///< longer profiles are max-pooled per column
    std::size_t maxRows = 24;     ///< taller profiles are scaled vertically
};

/// Step chart of the stack profile s_0..s_|π|. With `annotation`, marks the
/// level triple, the cut positions and the u/v/x/y/z spans. Deterministic.
std::string render_ascii(const RunPath& path, const Extraction* annotation = nullptr, ChartOptions options = {});

/// The same chart as a standalone SVG document; never downsampled.
std::string render_svg(const RunPath& path, const Extraction* annotation = nullptr);

} // namespace pumpkit
