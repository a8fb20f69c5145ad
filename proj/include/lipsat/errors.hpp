#pragma once

#include <stdexcept>
#include <string>

namespace lipsat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct IllDefinedMorphism : Error {
    std::string generator;
    std::string normal_form;
    IllDefinedMorphism(std::string gen, std::string nf)
        : Error("morphism does not respect relation " + gen +
                " (maps to nonzero normal form " + nf + ")"),
          generator(std::move(gen)),
          normal_form(std::move(nf)) {}
};

struct NonMonomialIdeal : Error {
    using Error::Error;
};

struct MalformedCertificate : Error {
    using Error::Error;
};

struct TruncationInsufficient : Error {
    using Error::Error;
};

struct ArcOffVariety : Error {
    using Error::Error;
};

struct ZeroGenerator : Error {
    using Error::Error;
};

struct DegenerateSample : Error {
    using Error::Error;
};

struct InconsistentChain : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(col_) + ": " + what_),
          line(line_),
          column(col_) {}
};

}  // namespace lipsat
