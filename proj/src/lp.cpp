#include "rainbow/lp.hpp"

#include "rainbow/hypergraph.hpp"

#include <optional>

namespace rainbow {

namespace {

    // Row i reads  x[basis[i]] = rhs[i] + sum_j coef[i][j] * x[nonbasic[j]],
    // the objective reads  z = z0 + sum_j obj[j] * x[nonbasic[j]].
    class Dictionary {
    public:
        Dictionary(const LinearProgram& lp, std::size_t n_cols)
            : n_struct_(n_cols)
            , rhs_(lp.b)
            , coef_(lp.a.size(), std::vector<Rational>(n_cols))
            , obj_(n_cols)
        {
            const std::size_t m = lp.a.size();
            for (std::size_t i = 0; i < m; ++i) {
                basis_.push_back(n_cols + i);
                for (std::size_t j = 0; j < n_cols; ++j)
                    coef_[i][j] = -lp.a[i][j];
            }
            for (std::size_t j = 0; j < n_cols; ++j)
                nonbasic_.push_back(j);
        }

        std::size_t rows() const { return basis_.size(); }
        std::size_t cols() const { return nonbasic_.size(); }
        std::size_t pivots() const { return pivots_; }
        std::size_t artificial() const { return n_struct_ + rows(); }

        void pivot(std::size_t r, std::size_t s)
        {
            ++pivots_;
            const Rational inv = 1 / coef_[r][s];
            auto& row = coef_[r];
            // Solve row r for the entering variable.
            rhs_[r] = -rhs_[r] * inv;
            for (std::size_t j = 0; j < cols(); ++j)
                row[j] = j == s ? inv : -row[j] * inv;

            for (std::size_t i = 0; i < rows(); ++i) {
                if (i == r || sgn(coef_[i][s]) == 0)
                    continue;
                substitute(coef_[i], rhs_[i], row, rhs_[r], s);
            }
            if (sgn(obj_[s]) != 0)
                substitute(obj_, z0_, row, rhs_[r], s);
            std::swap(basis_[r], nonbasic_[s]);
        }

        // Bland: smallest-index improving column, then smallest-index basic
        // variable among minimum-ratio rows. Returns false when unbounded.
        bool optimize()
        {
            while (true) {
                std::optional<std::size_t> enter;
                for (std::size_t j = 0; j < cols(); ++j)
                    if (sgn(obj_[j]) > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter]))
                        enter = j;
                if (!enter)
                    return true;
                auto leave = ratio_test(*enter);
                if (!leave)
                    return false;
                pivot(*leave, *enter);
            }
        }

        std::optional<std::size_t> ratio_test(std::size_t s) const
        {
            std::optional<std::size_t> best;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (sgn(coef_[i][s]) >= 0)
                    continue;
                Rational ratio = rhs_[i] / -coef_[i][s];
                if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
                    best = i;
                    best_ratio = ratio;
                }
            }
            return best;
        }

        // Phase one with a single auxiliary variable x_a added to every row.
        // Returns false when the program is infeasible.
        bool make_feasible(const LinearProgram& lp)
        {
            std::optional<std::size_t> most_negative;
            for (std::size_t i = 0; i < rows(); ++i)
                if (sgn(rhs_[i]) < 0 && (!most_negative || rhs_[i] < rhs_[*most_negative]))
                    most_negative = i;
            if (!most_negative) {
                set_objective(lp.c);
                return true;
            }

            const std::size_t a_col = cols();
            nonbasic_.push_back(artificial());
            for (auto& row : coef_)
                row.push_back(Rational(1));
            obj_.assign(cols(), Rational(0));
            obj_[a_col] = -1;
            z0_ = 0;

            pivot(*most_negative, a_col);
            optimize();
            if (sgn(z0_) < 0)
                return false;

            drive_out_artificial();
            set_objective(lp.c);
            return true;
        }

        void set_objective(const std::vector<Rational>& c)
        {
            obj_.assign(cols(), Rational(0));
            z0_ = 0;
            for (std::size_t j = 0; j < cols(); ++j)
                if (nonbasic_[j] < n_struct_)
                    obj_[j] += c[nonbasic_[j]];
            for (std::size_t i = 0; i < rows(); ++i) {
                if (basis_[i] >= n_struct_ || sgn(c[basis_[i]]) == 0)
                    continue;
                z0_ += c[basis_[i]] * rhs_[i];
                for (std::size_t j = 0; j < cols(); ++j)
                    obj_[j] += c[basis_[i]] * coef_[i][j];
            }
        }

        LpSolution extract(std::size_t m) const
        {
            LpSolution sol;
            sol.status = LpStatus::optimal;
            sol.value = z0_;
            sol.primal.assign(n_struct_, Rational(0));
            sol.dual.assign(m, Rational(0));
            for (std::size_t i = 0; i < rows(); ++i)
                if (basis_[i] < n_struct_)
                    sol.primal[basis_[i]] = rhs_[i];
            for (std::size_t j = 0; j < cols(); ++j) {
                auto var = nonbasic_[j];
                if (var >= n_struct_ && var < n_struct_ + m)
                    sol.dual[var - n_struct_] = -obj_[j];
            }
            sol.pivots = pivots_;
            return sol;
        }

    private:
        static void substitute(std::vector<Rational>& target, Rational& target_const, const std::vector<Rational>& row,
                               const Rational& row_const, std::size_t s)
        {
            const Rational factor = target[s];
            if (sgn(factor) == 0)
                return;
            target_const += factor * row_const;
            for (std::size_t j = 0; j < target.size(); ++j) {
                if (j == s)
                    target[j] = factor * row[j];
                else if (sgn(row[j]) != 0)
                    target[j] += factor * row[j];
            }
        }

        void drive_out_artificial()
        {
            const std::size_t art = artificial();
            for (std::size_t i = 0; i < rows(); ++i) {
                if (basis_[i] != art)
                    continue;
                std::optional<std::size_t> s;
                for (std::size_t j = 0; j < cols(); ++j)
                    if (sgn(coef_[i][j]) != 0 && (!s || nonbasic_[j] < nonbasic_[*s]))
                        s = j;
                if (s)
                    pivot(i, *s);
                else
                    // x_a = 0 identically here, so the row carries no information.
                    coef_[i].assign(cols(), Rational(0));
                break;
            }
            for (std::size_t j = 0; j < cols(); ++j) {
                if (nonbasic_[j] != art)
                    continue;
                nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(j));
                for (auto& row : coef_)
                    row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
                obj_.erase(obj_.begin() + static_cast<std::ptrdiff_t>(j));
                return;
            }
            // Artificial stayed basic on an all-zero row; drop that row.
            for (std::size_t i = 0; i < rows(); ++i) {
                if (basis_[i] == art) {
                    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                    coef_.erase(coef_.begin() + static_cast<std::ptrdiff_t>(i));
                    return;
                }
            }
        }

        std::size_t n_struct_;
        std::vector<std::size_t> basis_;
        std::vector<std::size_t> nonbasic_;
        std::vector<Rational> rhs_;
        std::vector<std::vector<Rational>> coef_;
        std::vector<Rational> obj_;
        Rational z0_{0};
        std::size_t pivots_ = 0;
    };

} // namespace

LpSolution solve_lp(const LinearProgram& lp)
{
    const std::size_t m = lp.a.size();
    const std::size_t n = lp.c.size();
    if (lp.b.size() != m)
        throw InputError("linear program: b does not match the row count");
    for (const auto& row : lp.a)
        if (row.size() != n)
            throw InputError("linear program: ragged constraint matrix");

    Dictionary dict(lp, n);
    if (!dict.make_feasible(lp)) {
        LpSolution sol;
        sol.status = LpStatus::infeasible;
        sol.pivots = dict.pivots();
        return sol;
    }
    if (!dict.optimize()) {
        LpSolution sol;
        sol.status = LpStatus::unbounded;
        sol.pivots = dict.pivots();
        return sol;
    }
    return dict.extract(m);
}

} // namespace rainbow
