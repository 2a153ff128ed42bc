#pragma once

#include <string>

#include <json.hpp>

#include "cpath/lambda_paths.hpp"
#include "cpath/trs.hpp"

namespace cpath {

using Json = nlohmann::ordered_json;

// {"input", "normal_form", "step_count", "steps": [{"step", "rule",
// "number", "position", "before", "after"}]}; paths in s-expression form.
Json traceToJson(const Path& input, const Path& normalForm, const RwTrace& trace);
std::string traceToText(const Path& input, const Path& normalForm, const RwTrace& trace);

Json sequenceToJson(const ReductionSequence& seq);

// {"left", "right", "normal_form", "certificate", "source", "target",
//  "left_steps", "right_steps"}
Json certificateToJson(const ReductionSequence& left, const ReductionSequence& right,
                       const Path& certificate);
std::string certificateToText(const ReductionSequence& left,
                              const ReductionSequence& right, const Path& certificate);

}  // namespace cpath
