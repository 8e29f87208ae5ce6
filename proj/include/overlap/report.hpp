// Deterministic JSON reports. Every number is an exact rational string
// ("p/q" or "inf"); key order is fixed.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/expansion.hpp"
#include "overlap/homotopy.hpp"
#include "overlap/overlap_search.hpp"
#include "overlap/pairing.hpp"

#include <json.hpp>

#include <string>

namespace overlap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "topoverlap-report/1";

/// {"schema": ..., "command": ..., "config": ...}; results are appended by the caller.
Json report_header(const std::string& command, const Json& config);

/// Names of the cells in the support, in index order.
Json cell_names(const ComplexSkeleton& x, int k, const BitVector& bits);
Json cochain_json(const ComplexSkeleton& x, const WeightedNorm& n, int k, const BitVector& bits);

Json to_json(const MuThreshold& m);
Json to_json(const ExpansionReport& r, const ComplexSkeleton& x);
Json to_json(const PointValue& p, const ComplexSkeleton& x, int d);
Json to_json(const OverlapResult& r, const ComplexSkeleton& x, int d);
Json to_json(const HomotopyRun& run, const ComplexSkeleton& t, const ComplexSkeleton& x, const WeightedNorm& n);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace overlap
