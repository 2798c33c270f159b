#include "insdel/compile.hpp"

#include <set>
#include <stdexcept>

namespace insdel {

namespace {

class Builder {
public:
    Builder(const SpecialGnfGrammar& g, Construction c) : g_(g) {
        out_.construction = c;
        ComponentSystem& sys = out_.system;
        sys.components = 4;
        sys.initial = 1;
        sys.final_component = 1;
        sys.axioms = {Word{g.grammar.start}};
        sys.alphabet = g.grammar.nonterminal_set();
        sys.terminals = g.grammar.terminal_set();
        sys.alphabet.insert(sys.terminals.begin(), sys.terminals.end());
        for (Symbol s : sys.alphabet) used_symbols_.insert(s.name());
    }

    Symbol fresh_symbol(const std::string& base) {
        Symbol s(fresh_name(base, used_symbols_));
        out_.system.alphabet.insert(s);
        return s;
    }

    void add(RuleGroup* group, const std::string& label, int source, Rule rule, int target) {
        if (!labels_.insert(label).second) throw std::logic_error("generated label collision: " + label);
        out_.system.rules.push_back({label, source, std::move(rule), target});
        if (group) group->rule_labels.push_back(label);
    }

    CompilationOutput& out() { return out_; }

    // Eraser labels must not coincide with any "<production>.i.j" label.
    std::string eraser_prefix() const {
        std::set<std::string> taken;
        for (const auto& r : g_.rules) taken.insert(r.production.label);
        std::string prefix = "k";
        while (taken.contains(prefix)) prefix += "'";
        return prefix;
    }

private:
    const SpecialGnfGrammar& g_;
    CompilationOutput out_;
    std::set<std::string> used_symbols_;
    std::set<std::string> labels_;
};


const Word none{};

void contextual_insertion(Builder& b, const ClassifiedProduction& r, RuleGroup& group) {
    const std::string& l = r.production.label;
    const Symbol p = b.fresh_symbol(l);
    const Symbol pp = b.fresh_symbol(l + "'");
    group.markers = {p, pp};
    const Symbol x = r.from;
    // X -> bY inserts Y first, then b; X -> Yb inserts b first, then Y.
    const Symbol first = r.shape == Shape::left_linear ? r.next : r.emitted;
    const Symbol second = r.shape == Shape::left_linear ? r.emitted : r.next;
    b.add(&group, l + ".1.1", 1, Rule::ins({x}, {p}, none), 2);
    b.add(&group, l + ".2.1", 2, Rule::ins({p}, {first}, none), 3);
    b.add(&group, l + ".2.2", 2, Rule::del(none, {pp}, none), 1);
    b.add(&group, l + ".3.1", 3, Rule::ins({p}, {pp}, none), 4);
    b.add(&group, l + ".3.2", 3, Rule::ins({pp}, {second}, none), 2);
    b.add(&group, l + ".4.1", 4, Rule::del(none, {x, p}, none), 3);
}

void marker_deletion(Builder& b, const ClassifiedProduction& r, RuleGroup& group, bool right_context) {
    const std::string& l = r.production.label;
    const Symbol p = b.fresh_symbol(l);
    group.markers = {p};
    const Symbol x = r.from;
    // X -> bY inserts Y then b behind p; X -> Yb inserts b then Y.
    const Symbol first = r.shape == Shape::left_linear ? r.next : r.emitted;
    const Symbol second = r.shape == Shape::left_linear ? r.emitted : r.next;
    b.add(&group, l + ".1.1", 1, Rule::ins(none, {p}, none), 2);
    b.add(&group, l + ".2.1", 2, right_context ? Rule::del(none, {x}, {p}) : Rule::del({p}, {x}, none), 3);
    b.add(&group, l + ".2.2", 2, Rule::del(none, {p}, none), 1);
    b.add(&group, l + ".3.1", 3, Rule::ins({p}, {first}, none), 4);
    b.add(&group, l + ".4.1", 4, Rule::ins({p}, {second}, none), 2);
}

void pair_insertion(Builder& b, const ClassifiedProduction& r, RuleGroup& group) {
    const std::string& l = r.production.label;
    const Symbol p = b.fresh_symbol(l);
    group.markers = {p};
    const Symbol x = r.from;
    // X -> bY: insert "b p", drop X behind p, insert Y, drop p behind Y.
    // X -> Yb: insert "Y p", drop X behind p, insert b, drop p behind b.
    const Symbol placed = r.shape == Shape::left_linear ? r.emitted : r.next;
    const Symbol later = r.shape == Shape::left_linear ? r.next : r.emitted;
    b.add(&group, l + ".1.1", 1, Rule::ins(none, {placed, p}, none), 2);
    b.add(&group, l + ".2.1", 2, Rule::del({p}, {x}, none), 3);
    b.add(&group, l + ".2.2", 2, Rule::del({later}, {p}, none), 1);
    b.add(&group, l + ".3.1", 3, Rule::ins(none, {later}, none), 2);
}

}  // namespace

SizeVector expected_size(Construction c) {
    switch (c) {
        case Construction::contextual_insertion: return {1, 1, 0, 2, 0, 0};
        case Construction::left_deletion: return {1, 1, 0, 1, 1, 0};
        case Construction::right_deletion: return {1, 1, 0, 1, 0, 1};
        case Construction::pair_insertion: return {2, 0, 0, 1, 1, 0};
    }
    throw std::invalid_argument("unknown construction");
}

const RuleGroup* CompilationOutput::group(std::string_view production) const {
    for (const auto& g : groups)
        if (g.production == production) return &g;
    return nullptr;
}

CompilationOutput compile(const SpecialGnfGrammar& g, Construction c) {
    Builder b(g, c);
    auto& out = b.out();

    out.groups.reserve(g.rules.size());
    for (const auto& r : g.rules) {
        auto& group = out.groups.emplace_back(RuleGroup{r.production.label, r.shape, r.production.lhs, r.production.rhs, {}, {}});
        if (r.shape != Shape::left_linear && r.shape != Shape::right_linear) continue;
        switch (c) {
            case Construction::contextual_insertion: contextual_insertion(b, r, group); break;
            case Construction::left_deletion: marker_deletion(b, r, group, false); break;
            case Construction::right_deletion: marker_deletion(b, r, group, true); break;
            case Construction::pair_insertion: pair_insertion(b, r, group); break;
        }
    }

    const std::string k = b.eraser_prefix();
    const Symbol a = g.pairs[0], bb = g.pairs[1], cc = g.pairs[2], d = g.pairs[3];
    RuleGroup* erase_ab = nullptr;
    RuleGroup* erase_cd = nullptr;
    RuleGroup* erase_sp = nullptr;
    for (auto& group : out.groups) {
        if (group.shape == Shape::erase_ab && !erase_ab) erase_ab = &group;
        if (group.shape == Shape::erase_cd && !erase_cd) erase_cd = &group;
        if (group.shape == Shape::erase_s_prime && !erase_sp) erase_sp = &group;
    }

    b.add(erase_sp, k + ".s", 1, Rule::del(none, {g.s_prime}, none), 1);
    if (c == Construction::contextual_insertion) {
        b.add(erase_ab, k + ".ab", 1, Rule::del(none, {a, bb}, none), 1);
        b.add(erase_cd, k + ".cd", 1, Rule::del(none, {cc, d}, none), 1);
    } else {
        const Symbol kk = b.fresh_symbol("K");
        const Symbol kp = b.fresh_symbol("K'");
        out.eraser_symbols = {kk, kp};
        if (erase_ab) erase_ab->markers = {kk};
        if (erase_cd) erase_cd->markers = {kp};
        b.add(erase_ab, k + ".1.1", 1, Rule::ins(none, {kk}, none), 2);
        b.add(erase_cd, k + ".1.2", 1, Rule::ins(none, {kp}, none), 2);
        if (c == Construction::pair_insertion) {
            b.add(erase_ab, k + ".2.1", 2, Rule::del({kk}, {a}, none), 3);
            b.add(erase_cd, k + ".2.2", 2, Rule::del({kp}, {cc}, none), 3);
            b.add(erase_ab, k + ".3.1", 3, Rule::del({kk}, {bb}, none), 4);
            b.add(erase_cd, k + ".3.2", 3, Rule::del({kp}, {d}, none), 4);
            b.add(erase_ab, k + ".4.1", 4, Rule::del(none, {kk}, none), 1);
            b.add(erase_cd, k + ".4.2", 4, Rule::del(none, {kp}, none), 1);
            out.notes.push_back(
                "pair insertion relies on a single nonterminal outside A B C D in every sentential form; "
                "this is a property of special-form derivations and is not checked");
        } else {
            const bool right = c == Construction::right_deletion;
            // With the context on the right, K sits after the pair and
            // consumes B before A.
            b.add(erase_ab, k + ".2.1", 2, right ? Rule::del(none, {bb}, {kk}) : Rule::del({kk}, {a}, none), 3);
            b.add(erase_cd, k + ".2.2", 2, right ? Rule::del(none, {d}, {kp}) : Rule::del({kp}, {cc}, none), 3);
            b.add(erase_ab, k + ".2.3", 2, Rule::del(none, {kk}, none), 1);
            b.add(erase_cd, k + ".2.4", 2, Rule::del(none, {kp}, none), 1);
            b.add(erase_ab, k + ".3.1", 3, right ? Rule::del(none, {a}, {kk}) : Rule::del({kk}, {bb}, none), 2);
            b.add(erase_cd, k + ".3.2", 3, right ? Rule::del(none, {cc}, {kp}) : Rule::del({kp}, {d}, none), 2);
        }
    }
    out.system.sort_rules();
    return out;
}

}  // namespace insdel
