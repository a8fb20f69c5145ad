#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lipsat/lipschitz.hpp"
#include "lipsat/sampler.hpp"

namespace lipsat {

struct RingDecl {
    std::string name;
    PresentedRing ring;
};

struct MapDecl {
    std::string name, source, target;
    RingMorphism morphism;
};

struct BranchDecl {
    std::string name, ring;
    Branch branch;
};

struct ElemDecl {
    std::string name, ring;
    Polynomial value;
    // integrality representative num/den; kept as text because it is
    // written over the source ring of whichever map the command names
    std::optional<std::string> num_text, den_text;
};

struct Command {
    std::string kind;
    std::string name;  // a map (most kinds), checked at run time
    std::optional<std::string> element;
    std::vector<std::pair<std::string, std::string>> flags;  // value "" if bare
};

using Statement = std::variant<RingDecl, MapDecl, BranchDecl, ElemDecl, Command>;

struct Session {
    std::vector<Statement> statements;

    const RingDecl* find_ring(const std::string& n) const;
    const MapDecl* find_map(const std::string& n) const;
    const ElemDecl* find_elem(const std::string& n) const;
    std::vector<const BranchDecl*> branches_on(const std::string& ring) const;
};

/// Parses the session DSL; throws ParseError with 1-based line/column.
Session parse_session(const std::string& text);

/// Canonical text form; parse(print(s)) is structurally equal to s.
std::string print_session(const Session& s);

struct RunOptions {
    SearchBounds bounds;
    int trunc = kDefaultTruncation;
    EpsilonLadder ladder;
    bool standard_arcs = true;  // --arcs standard|none
    std::string format = "json";
};

struct RunResult {
    std::vector<nlohmann::json> documents;
    std::string text;  // rendered output in the requested format
    int exit_code = 0;  // 0 done, 1 input error, 2 soundness violation
};

RunResult run_session(const Session& s, const RunOptions& opts);

}  // namespace lipsat
