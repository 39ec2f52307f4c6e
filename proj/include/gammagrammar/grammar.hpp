#pragma once

// Context-free grammars: each variable is replaced by a polynomial, which
// induces a derivation D on the Laurent polynomial ring.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammagrammar/polynomial.hpp"

namespace gg {

class Grammar {
   public:
    using Rules = std::map<VarId, Polynomial>;

    Grammar() = default;
    Grammar(std::string name, Rules rules);

    /// Rule for v; variables without a rule are inert (rule 0).
    const Polynomial& rule(const VarId& v) const;
    bool has_rule(const VarId& v) const { return rules_.count(v) != 0; }
    const Rules& rules() const noexcept { return rules_; }
    const std::string& name() const noexcept { return name_; }
    /// Variables that have a rule or appear on some right-hand side.
    std::set<VarId> variables() const;

    /// Parses "var -> polynomial" lines; '#' starts a comment.
    static Grammar parse(std::string_view text, std::string name = {});
    std::string to_string() const;

   private:
    std::string name_;
    Rules rules_;
};

Polynomial derive(const Grammar& g, const Polynomial& p);
Polynomial derive_n(const Grammar& g, Polynomial p, unsigned n);

/// Applies the grammars of `gs` cyclically, `steps` applications in total (so `steps` odd
/// with two grammars gives D1 (D2 D1)^k).
Polynomial derive_sequence(std::span<const Grammar> gs, Polynomial p, unsigned steps);

/// `rounds` full passes over gs, each applying gs[0], gs[1], ... in order.
Polynomial derive_alternating(std::span<const Grammar> gs, Polynomial p, unsigned rounds);

/// Change of variables from an old grammar to a new one. `defs` maps every new variable
/// to a polynomial in the old variables.
using VariableDefs = std::map<VarId, Polynomial>;

struct TransformCheck {
    bool ok = true;
    std::optional<VarId> variable;  // first offending new variable
    Polynomial old_side;            // D_old(defs(w))
    Polynomial new_side;            // G_new(w) expanded through defs
};

/// Checks D_old(defs(w)) == G_new(w)|defs for every new variable w.
TransformCheck verify_grammar_transform(const Grammar& old_g, const VariableDefs& defs,
                                        const Grammar& new_g);

struct CommuteCheck {
    bool ok = true;
    std::optional<VarId> start;
    unsigned steps = 0;
    Polynomial old_side;
    Polynomial new_side;
};

/// For each new variable w and every k <= max_steps, derive_sequence over the new grammars
/// started at w and expanded through defs must equal derive_sequence over the old grammars
/// started at defs(w).
CommuteCheck verify_transform_commutes(std::span<const Grammar> old_gs, const VariableDefs& defs,
                                       std::span<const Grammar> new_gs, unsigned max_steps);

// Preset catalog --------------------------------------------------------------

const Grammar& preset(std::string_view name);
std::vector<std::string> preset_names();

/// A named change of variables between two grammar families.
struct GrammarTransform {
    std::string id;
    std::vector<std::string> old_grammars;
    std::vector<std::string> new_grammars;
    VariableDefs defs;
};

const std::vector<GrammarTransform>& transform_catalog();

}  // namespace gg
