#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WrongCardinality : public Error {
public:
    using Error::Error;
};

class VertexOutOfRange : public Error {
public:
    using Error::Error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParameterGap : public Error {
public:
    using Error::Error;
};

class HostMismatch : public Error {
public:
    using Error::Error;
};

class MemoryViolation : public Error {
public:
    MemoryViolation(std::size_t machine, std::size_t round, std::size_t load,
                    std::size_t budget)
        : Error("machine " + std::to_string(machine) + " exceeded memory budget in round " +
                std::to_string(round) + ": load " + std::to_string(load) + " > s = " +
                std::to_string(budget)),
          machine(machine), round(round), load(load), budget(budget) {}

    std::size_t machine;
    std::size_t round;
    std::size_t load;
    std::size_t budget;
};

class SampleOverflow : public Error {
public:
    using Error::Error;
};

class AttemptsExhausted : public Error {
public:
    using Error::Error;
};

class TooManyEdges : public Error {
public:
    using Error::Error;
};

class EdgeExplosion : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}

    std::size_t line;
};

}  // namespace hgm
