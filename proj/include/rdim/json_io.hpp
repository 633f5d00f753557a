#ifndef RDIM_JSON_IO_HPP
#define RDIM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "rdim/an_category.hpp"
#include "rdim/commalg.hpp"
#include "rdim/deduce.hpp"
#include "rdim/descent.hpp"
#include "rdim/gradedalg.hpp"

namespace rdim {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);

// ---- input schemas --------------------------------------------------------

/// { "variables": ["x","y"], "relations": ["x*y"] }
RingPresentation ring_from_json(const Json& j);

/// { "ring": <ring>, "free_rank": 2, "relations": [["x","y"],["0","x"]] }
/// (relations are the columns of the presentation matrix)
FPModule module_from_json(const Json& j);

/// { "subring": <ring>, "module": { "generators": [...], "action": {...} } }
/// or { "preset": "torus", "params": { "n": 3 } }
SubringModuleProblem problem_from_json(const Json& j);

/// { "vertices": 5, "arrows": [[1,2],[3,2]] }
Quiver quiver_from_json(const Json& j);

/// { "edges": [[0,1],[1,2]], "root": 0, "signs": {"1-2": "+"} }
RootedSignedTree tree_from_json(const Json& j);

/// { "n": 3, "vertices": 4, "simplices": [{"verts":[0],"label":"DEFAULT"},...] }
/// Missing faces are an error unless close_faces is set.
StratLabeledComplex labeled_complex_from_json(const Json& j, bool close_faces);

/// { "entities": [...], "facts": [...] }
FactDatabase database_from_json(const Json& j);

/// { "n": 2, "summands": [ {"lo":1,"hi":2,"shift":0}, ... ] }
IntervalObject interval_object_from_json(const Json& j);

// ---- report serialization ---------------------------------------------------

Json dimension_report_to_json(const DimensionReport& rep, const RingPtr& ring);
Json regseq_result_to_json(const RegSeqResult& res);
Json cover_report_to_json(const CoverBoundReport& rep);
Json lower_bound_certificate_to_json(const LowerBoundCertificate& cert, const RingPtr& ring);
Json intervals_to_json(const std::map<std::string, std::map<Quantity, BoundInterval>>& m);
Json trace_to_json(const std::vector<TraceStep>& trace);
Json generation_result_to_json(const GenerationResult& r);

/// Stable digest of a JSON value (FNV-1a over the compact dump).
std::string json_digest(const Json& j);

/// Standard report envelope: tool name/version, digest and echo of the
/// input, plus the payload under "result".
Json report_envelope(const Json& input_echo, Json payload);

} // namespace rdim

#endif
