#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tinv/config.hpp"
#include "tinv/integer.hpp"
#include "tinv/relation.hpp"

namespace tinv {

namespace program {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Const, Var, Add, Sub, Mul, Pow, Neg };
    Op op = Op::Const;
    Integer value;        // Const
    std::size_t var = 0;  // Var: index into the variable table
    bool primed = false;  // Var: refers to the post-state
    ExprPtr lhs, rhs;
};

struct Comparison {
    enum class Rel { Lt, Le, Gt, Ge, Eq, Ne };
    ExprPtr lhs;
    Rel rel = Rel::Eq;
    ExprPtr rhs;
};

using Guard = std::vector<Comparison>;  // conjunction; empty means true

struct Assignment {
    std::size_t var = 0;
    ExprPtr value;
};

struct Rule {
    Guard guard;
    std::vector<Assignment> updates;  // simultaneous
    int line = 0;
};

}  // namespace program

using Valuation = std::vector<Integer>;

/// A guarded-command program: `init` lines and rules `guard -> x := e, ...`.
struct Program {
    std::vector<std::string> variables;
    std::vector<Valuation> initial;
    std::vector<program::Rule> rules;
};

Program parse_program(std::string_view text);

/// Finite fragment of a program's transition relation.
struct ProgramSystem {
    TransitionSystem system;
    std::vector<std::string> variables;
    std::map<State, Valuation> valuations;
    bool truncated = false;
};

/// State id for a valuation: zigzag-encode each value (z = 2v for v >= 0,
/// z = -2v - 1 otherwise), then fold with the Cantor pairing
/// pi(a, b) = (a + b)(a + b + 1)/2 + b from the right:
/// id = pi(z_1, pi(z_2, ..., pi(z_{k-1}, z_k))). Monotone in every |v_i|.
/// Throws ArithmeticOverflow if the id does not fit in 64 bits.
State encode_valuation(const Valuation& v);

std::string describe_encoding(const std::vector<std::string>& variables);

/// Breadth-first exploration from the initial valuations, firing rules in file
/// order. Stops adding states at `state_cap` and expanding at depth
/// `depth_cap`; either event sets `truncated`.
ProgramSystem simulate_program(const Program& prog, std::size_t state_cap, std::size_t depth_cap,
                               const Caps& caps = {});

/// A relation between pre- and post-states written over x and x':
/// one conjunction per line, lines are disjoined.
struct TransitionPredicate {
    std::vector<std::string> variables;
    std::vector<program::Guard> disjuncts;
};

TransitionPredicate parse_transition_predicate(std::string_view text,
                                               const std::vector<std::string>& variables);

/// Every explored pair (s, t) satisfying the predicate.
FiniteRelation instantiate(const ProgramSystem& ps, const TransitionPredicate& pred,
                           const Caps& caps = {});

}  // namespace tinv
