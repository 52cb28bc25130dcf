#pragma once

#include "dspforge/instance.hpp"

namespace dspforge::detail {

DspInstance build_intermediate(const CliqueGraph& g, int k, bool directed);
DspInstance split_edges(const DspInstance& intermediate);
DspInstance split_vertices(const DspInstance& intermediate);

/// Freezes `b` into `inst.graph` and fills the terminal pairs and declared crossings.
void finalize(DspInstance& inst, const GraphBuilder& b);

}  // namespace dspforge::detail
