#include "cpath/trace_io.hpp"

#include <sstream>

#include "cpath/syntax.hpp"

namespace cpath {

Json traceToJson(const Path& input, const Path& normalForm, const RwTrace& trace) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const RwStep& s = trace.steps[i];
        steps.push_back({{"step", i + 1},
                         {"rule", std::string(ruleLabel(s.rule))},
                         {"number", ruleNumber(s.rule)},
                         {"position", s.position.steps},
                         {"before", printPath(s.before)},
                         {"after", printPath(s.after)}});
    }
    return Json{{"input", printPath(input)},
                {"normal_form", printPath(normalForm)},
                {"step_count", trace.size()},
                {"steps", std::move(steps)}};
}

std::string traceToText(const Path& input, const Path& normalForm, const RwTrace& trace) {
    std::ostringstream out;
    out << "input: " << printPath(input) << "\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const RwStep& s = trace.steps[i];
        out << (i + 1) << ". " << ruleLabel(s.rule) << " (" << ruleNumber(s.rule) << ") at "
            << toString(s.position) << "\n   " << printPath(s.after) << "\n";
    }
    out << "normal form: " << printPath(normalForm) << "\n";
    out << "steps: " << trace.size() << "\n";
    return out.str();
}

namespace {

const char* stepName(StepKind kind) {
    switch (kind) {
        case StepKind::Beta:
            return "beta";
        case StepKind::Eta:
            return "eta";
        case StepKind::Alpha:
            return "alpha";
    }
    return "?";
}

}  // namespace

Json sequenceToJson(const ReductionSequence& seq) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const SequenceStep& s = seq.steps[i];
        steps.push_back({{"step", i + 1},
                         {"kind", stepName(s.kind)},
                         {"location", s.location.steps},
                         {"before", printTerm(seq.terms[i])},
                         {"after", printTerm(seq.terms[i + 1])}});
    }
    return steps;
}

Json certificateToJson(const ReductionSequence& left, const ReductionSequence& right,
                       const Path& certificate) {
    return Json{{"left", printTerm(left.first())},
                {"right", printTerm(right.first())},
                {"normal_form", printTerm(left.last())},
                {"certificate", printPath(certificate)},
                {"source", printTerm(certificate.source())},
                {"target", printTerm(certificate.target())},
                {"left_steps", sequenceToJson(left)},
                {"right_steps", sequenceToJson(right)}};
}

std::string certificateToText(const ReductionSequence& left,
                              const ReductionSequence& right, const Path& certificate) {
    std::ostringstream out;
    out << printPath(certificate) << "\n";
    auto emit = [&](const char* side, const ReductionSequence& seq) {
        out << side << ": " << prettyTerm(seq.first()) << "\n";
        for (std::size_t i = 0; i < seq.steps.size(); ++i)
            out << "  " << stepName(seq.steps[i].kind) << " at "
                << toString(seq.steps[i].location) << ": " << prettyTerm(seq.terms[i + 1])
                << "\n";
    };
    emit("left", left);
    emit("right", right);
    return out.str();
}

}  // namespace cpath
