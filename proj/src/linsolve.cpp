#include "lipsat/linsolve.hpp"

namespace lipsat {

std::optional<std::vector<Rat>> solve_sparse(std::vector<LinearRow> rows,
                                             std::size_t ncols) {
    std::map<int, LinearRow> pivots;  // pivot column -> normalized row
    for (auto& row : rows) {
        // reduce against existing pivots
        while (!row.coeffs.empty()) {
            int col = row.coeffs.begin()->first;
            auto it = pivots.find(col);
            if (it == pivots.end()) break;
            Rat f = row.coeffs.begin()->second;
            for (const auto& [c, v] : it->second.coeffs) {
                auto [jt, fresh] = row.coeffs.emplace(c, -f * v);
                if (!fresh) {
                    jt->second -= f * v;
                    if (jt->second == 0) row.coeffs.erase(jt);
                }
            }
            row.rhs -= f * it->second.rhs;
        }
        if (row.coeffs.empty()) {
            if (row.rhs != 0) return std::nullopt;
            continue;
        }
        int col = row.coeffs.begin()->first;
        Rat lead = row.coeffs.begin()->second;
        for (auto& [c, v] : row.coeffs) v /= lead;
        row.rhs /= lead;
        pivots.emplace(col, std::move(row));
    }
    std::vector<Rat> sol(ncols, Rat(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rat v = it->second.rhs;
        for (const auto& [c, coef] : it->second.coeffs)
            if (c != it->first) v -= coef * sol[(std::size_t)c];
        sol[(std::size_t)it->first] = v;
    }
    return sol;
}

}  // namespace lipsat
