// Copyright 2026 The kdq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// JSON encoding of reports and decoding of input files. Complex numbers are
// [re, im] pairs; object keys come out sorted and doubles use the shortest
// representation that round-trips.

#include <string>
#include <vector>

#include <json.hpp>

#include "kdq/block_structure.hpp"
#include "kdq/core_types.hpp"
#include "kdq/dft_enum.hpp"
#include "kdq/kd_core.hpp"
#include "kdq/oracle.hpp"
#include "kdq/phase_amplitude.hpp"
#include "kdq/vector_clusters.hpp"
#include "kdq/witnesses.hpp"

namespace kdq::report {

using Json = nlohmann::json;

Json complex_json(Complex z);
Json vector_json(const ComplexVector& v);
Json matrix_json(const ComplexMatrix& m);

Json to_json(const KDTable& t);
Json to_json(const ClassicalityReport& r);
Json to_json(const BlockDecomposition& b);
Json to_json(const Theorem3Report& r);
Json to_json(const ClusterDecomposition& c, bool dimension_law);
Json to_json(const WitnessReport& w);
Json to_json(const OracleCatalog& c);
Json to_json(const SoundnessReport& r);
Json to_json(const FeasibilityResult& f, const SupportPair& sp);
Json to_json(const DftClassicalState& s, bool verified);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// {"d": n, "entries": n x n [re, im]}. Throws InvalidInput on malformed
/// content; unitarity is checked by the caller.
ComplexMatrix parse_matrix(const std::string& text);

/// {"d": n, "coeffs": n [re, im]}, unit norm within 1e-8, renormalized.
PureState parse_state(const std::string& text);

/// {"vectors": [[[re, im], ...], ...]}.
std::vector<ComplexVector> parse_vectors(const std::string& text);

/// Comma-separated, e.g. "0,2,3". Sorted and deduplicated checks are left
/// to the consumer.
IndexSet parse_index_list(const std::string& text);

}  // namespace kdq::report
