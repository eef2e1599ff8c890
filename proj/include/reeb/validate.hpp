#ifndef REEB_VALIDATE_HPP
#define REEB_VALIDATE_HPP

#include <string>
#include <vector>

#include "reeb/core.hpp"

namespace reeb::validate {

// Structural conditions a Reeb graph of a simple Morse function on the
// projective plane must satisfy: the graph is a tree, exactly one vertex has
// degree 2 and all others degree 1 or 3, and only degree-1 vertices are
// sources or sinks.  The (1,1) orientation of the degree-2 vertex and the
// no-internal-sink/source rule are inferred from the saddle local model; the
// report text marks them as such.
enum class Condition {
    Connected,
    AcyclicTree,
    DegreeProfile,
    UniqueDeg2,
    LeafOrientation,
    SaddleOrientation,
};

const char* condition_name(Condition c);

struct CheckResult {
    Condition id;
    bool pass;
    std::string detail;  // on failure names at least one witness vertex/edge
};

struct ValidationReport {
    bool is_valid = false;
    std::vector<CheckResult> checks;

    bool passed(Condition c) const;
    std::string summary() const;  // line-oriented text form
};

ValidationReport check_reeb_structure(const ExplicitGraph& g);

// Adversarial generator for tests: returns a graph violating the targeted
// condition.  Throws MutationError when the mode cannot apply to g.
enum class MutationMode { AddCycle, SplitDeg2, FlipInternalToSink };

ExplicitGraph mutate_for_tests(const ExplicitGraph& g, MutationMode mode);

// The condition a mutated graph is expected to fail.
Condition predicted_failure(MutationMode mode);

}  // namespace reeb::validate

#endif
