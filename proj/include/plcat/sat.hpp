#ifndef PLCAT_SAT_HPP
#define PLCAT_SAT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcat/errors.hpp"

namespace plcat {

// 3-CNF formula: clauses of exactly three nonzero literals, sign = polarity,
// magnitude = 1-based variable index. Tautological clauses (x and ¬x in one
// clause) are dropped at construction; the count is recorded.
struct Formula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
    int removed_tautologies = 0;

    bool evaluate(const std::vector<bool>& assignment) const;
};

struct DimacsOptions {
    bool pad_to_three = false;  // repeat the last literal of short clauses
};

// DIMACS CNF: "p cnf <vars> <clauses>" header, zero-terminated clauses,
// 'c' comment lines. Clauses with more (or, unless padding, fewer) than three
// literals raise NotThreeCnfError. Throws SyntaxError with the line number.
Formula parse_dimacs(std::string_view text, const DimacsOptions& opt = {});

std::string to_dimacs(const Formula& f);

inline constexpr int kSatVariableGuard = 25;

// Exhaustive satisfiability over all assignments; returns the first
// satisfying assignment in numeric order (variable i = bit i-1) or nullopt.
// Throws TooManyVariablesError beyond the guard. Serial and OpenMP paths
// return the same assignment.
std::optional<std::vector<bool>> sat_bruteforce(const Formula& f);
std::optional<std::vector<bool>> sat_bruteforce_serial(const Formula& f);
std::optional<std::vector<bool>> sat_bruteforce_parallel(const Formula& f);

}  // namespace plcat

#endif
