#pragma once

#include <json.hpp>

#include "posmap/channels.hpp"
#include "posmap/discrimination.hpp"

// JSON wire formats. Complex numbers serialize as [re, im] (plain numbers
// are accepted on input); density matrices as
// {"dim_a": .., "dim_b": .., "rows": [[[re, im], ..], ..]}.

namespace posmap {

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Mat& m, int dim_a, int dim_b);
// Plain square matrix (no subsystem split), e.g. a Breuer-Hall U.
Json square_matrix_to_json(const Mat& m);
Mat square_matrix_from_json(const Json& j);

struct BipartiteState {
  Mat rho;
  int dim_a = 0;
  int dim_b = 0;
};
BipartiteState state_matrix_from_json(const Json& j);

// Map descriptors: {"map":"reduction","k":0.5}, {"map":"breuer_hall","U":[..]},
// {"map":"gen_choi","d":3,"kk":1}, {"map":"transpose"}, {"map":"identity"},
// {"map":"custom","mu":..,"kraus":[..]}. `default_dim` fills in a missing "d".
PositiveMap map_from_json(const Json& j, int default_dim);

// Channel descriptors: {"channel":"depolarizing","d":3,"p":0.5},
// {"channel":"dephasing","d":3,"v":0.7}, {"channel":"kraus","ops":[..]}.
Channel channel_from_json(const Json& j);

Json report_to_json(const DetectionReport& report);
Json witness_to_json(const WitnessReport& report);

}  // namespace posmap
