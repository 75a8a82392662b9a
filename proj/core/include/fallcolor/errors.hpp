#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fallcolor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters, malformed inputs, violated preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Instance exceeds the configured solver capacity.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// No fall coloring exists, so chi_f / psi_f are undefined.
class NoFallColoringError : public Error {
public:
    using Error::Error;
};

/// The search ran out of time/budget before reaching a verdict.
class UndecidedError : public Error {
public:
    using Error::Error;
};

/// A theorem-backed construction failed its own is_fall check.
/// Carries the offending instance so the failure is replayable.
class SelfVerificationError : public Error {
public:
    SelfVerificationError(const std::string& what, std::string graph6, std::vector<int> colors)
        : Error(what), graph6_(std::move(graph6)), colors_(std::move(colors)) {}

    const std::string& graph6() const { return graph6_; }
    const std::vector<int>& colors() const { return colors_; }

private:
    std::string graph6_;
    std::vector<int> colors_;
};

/// Input graph is not regular; carries the observed degree spread.
class NotRegularError : public Error {
public:
    NotRegularError(const std::string& what, int min_degree, int max_degree)
        : Error(what), min_degree_(min_degree), max_degree_(max_degree) {}

    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }

private:
    int min_degree_;
    int max_degree_;
};

/// Input graph has an odd cycle; carries one as a vertex sequence.
class NotBipartiteError : public Error {
public:
    NotBipartiteError(const std::string& what, std::vector<int> odd_cycle)
        : Error(what), odd_cycle_(std::move(odd_cycle)) {}

    const std::vector<int>& odd_cycle() const { return odd_cycle_; }

private:
    std::vector<int> odd_cycle_;
};

/// A map required to be surjective is not.
class SurjectivityError : public Error {
public:
    using Error::Error;
};

} // namespace fallcolor
