#include "plcat/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "plcat/parallel.hpp"

namespace plcat {

bool Formula::evaluate(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Formula parse_dimacs(std::string_view text, const DimacsOptions& opt) {
    Formula f;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    int declared_clauses = 0;
    std::vector<int> current;
    int clause_index = 0;

    auto finish_clause = [&](int at_line) {
        if (current.size() > 3) throw NotThreeCnfError("clause has more than 3 literals", clause_index);
        if (current.size() < 3) {
            if (!opt.pad_to_three || current.empty())
                throw NotThreeCnfError("clause does not have exactly 3 literals", clause_index);
            while (current.size() < 3) current.push_back(current.back());
        }
        for (int lit : current)
            if (std::abs(lit) > f.num_vars)
                throw SyntaxError("literal out of declared range", at_line);
        bool tautology = false;
        for (std::size_t i = 0; i < 3 && !tautology; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (current[i] == -current[j]) {
                    tautology = true;
                    break;
                }
        if (tautology)
            ++f.removed_tautologies;
        else
            f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        ++clause_index;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            if (header_seen) throw SyntaxError("duplicate problem line", lineno);
            if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                throw SyntaxError("malformed problem line", lineno);
            if (f.num_vars < 0 || declared_clauses < 0)
                throw SyntaxError("negative counts in problem line", lineno);
            header_seen = true;
            continue;
        }
        if (tok == "%") break;  // trailing marker some generators emit
        if (!header_seen) throw SyntaxError("clause before problem line", lineno);
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0)
                finish_clause(lineno);
            else
                current.push_back(lit);
        }
        if (!ls.eof()) throw SyntaxError("unexpected token in clause", lineno);
    }
    if (!header_seen) throw SyntaxError("missing problem line", lineno);
    if (!current.empty()) finish_clause(lineno);  // final clause may omit the 0
    if (clause_index != declared_clauses)
        throw SyntaxError("clause count does not match problem line", lineno);
    return f;
}

std::string to_dimacs(const Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
    return out.str();
}

namespace {

std::vector<bool> unpack(std::uint64_t bits, int n) {
    std::vector<bool> a(n);
    for (int i = 0; i < n; ++i) a[i] = (bits >> i) & 1;
    return a;
}

}  // namespace

std::optional<std::vector<bool>> sat_bruteforce_serial(const Formula& f) {
    if (f.num_vars > kSatVariableGuard) throw TooManyVariablesError("too many variables");
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<bool> a = unpack(bits, f.num_vars);
        if (f.evaluate(a)) return a;
    }
    return std::nullopt;
}

std::optional<std::vector<bool>> sat_bruteforce_parallel(const Formula& f) {
    if (f.num_vars > kSatVariableGuard) throw TooManyVariablesError("too many variables");
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    auto fs = parallel::first_success_parallel(total, total, [&f](std::uint64_t bits) {
        return f.evaluate(unpack(bits, f.num_vars));
    });
    if (!fs.rank) return std::nullopt;
    return unpack(*fs.rank, f.num_vars);
}

std::optional<std::vector<bool>> sat_bruteforce(const Formula& f) {
    if (f.num_vars > kSatVariableGuard) throw TooManyVariablesError("too many variables");
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    if (parallel::workers_for(total) > 1) return sat_bruteforce_parallel(f);
    return sat_bruteforce_serial(f);
}

}  // namespace plcat
