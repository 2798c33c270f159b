#include "insdel/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "insdel/compile.hpp"
#include "insdel/special_gnf.hpp"
#include "insdel/text_format.hpp"
#include "insdel/verify.hpp"

namespace insdel::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

Grammar load_grammar(const std::string& path) {
    const std::string text = read_file(path);
    if (detect_kind(text) != FileKind::grammar) throw InputError("'" + path + "' is not a grammar file");
    return parse_grammar(text);
}

ComponentSystem load_component_system(const std::string& path) {
    const std::string text = read_file(path);
    if (detect_kind(text) != FileKind::component_system)
        throw InputError("'" + path + "' is not a component-form system file");
    return parse_component_system(text);
}

void report(const Diagnostics& ds, std::ostream& err) {
    for (const auto& d : ds) err << d << '\n';
}

SpecialGnfGrammar special_form(const Grammar& g, std::ostream& err) {
    if (g.kind == GrammarKind::geffert) {
        report(validate_geffert(g), err);
        return linearize(g);
    }
    report(validate_special_gnf(g), err);
    return as_special_gnf(g);
}

struct BoundOptions {
    std::size_t max_len = 8;
    std::size_t max_intermediate = 0;  // 0 = max_len + 6
    std::size_t max_steps = 200;
    std::size_t budget = 1'000'000;

    void attach(CLI::App* app, bool with_len) {
        if (with_len) app->add_option("--max-len", max_len, "longest output word")->capture_default_str();
        app->add_option("--max-intermediate", max_intermediate, "longest intermediate word (default max-len + 6)");
        app->add_option("--max-steps", max_steps, "derivation step budget")->capture_default_str();
        app->add_option("--budget", budget, "visited-configuration budget")->capture_default_str();
    }

    SearchBounds bounds() const {
        SearchBounds b;
        b.max_len = max_len;
        if (max_intermediate) b.max_intermediate = max_intermediate;
        b.max_steps = max_steps;
        b.visited_budget = budget;
        return b;
    }
};

void print_words(const WordSet& words, std::ostream& out) {
    for (const auto& w : words) out << format_word(w) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Insertion-deletion systems and graph-controlled simulations of special-form grammars", "insdel"};
    app.require_subcommand(1, 1);

    std::string file, grammar_file, system_file, output, word_text, rule_prefix, form_text, target, format = "dot";
    int construction = 0;
    bool want_trace = false;
    BoundOptions bo;

    auto* validate_cmd = app.add_subcommand("validate", "check a grammar or system file");
    validate_cmd->add_option("file", file, "grammar or system file")->required();

    auto* compile_cmd = app.add_subcommand("compile", "build the 4-component system for a grammar");
    compile_cmd->add_option("--theorem", construction, "construction 1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
    compile_cmd->add_option("grammar", grammar_file, "grammar file")->required();
    compile_cmd->add_option("-o,--output", output, "output system file (default stdout)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "bounded language of a grammar or system");
    auto* eg = enumerate_cmd->add_option("--grammar", grammar_file, "grammar file");
    auto* es = enumerate_cmd->add_option("--system", system_file, "system file");
    eg->excludes(es);
    es->excludes(eg);
    bo.attach(enumerate_cmd, true);

    auto* member_cmd = app.add_subcommand("member", "bounded membership with an optional witness trace");
    member_cmd->add_option("--system", system_file, "system file")->required();
    member_cmd->add_option("--word", word_text, "space-separated tokens, or eps")->required();
    member_cmd->add_flag("--trace", want_trace, "print the witness trace as JSON");
    bo.attach(member_cmd, false);

    auto* compare_cmd = app.add_subcommand("compare", "grammar oracle against a compiled system");
    compare_cmd->add_option("--grammar", grammar_file, "grammar file")->required();
    compare_cmd->add_option("--system", system_file, "system file")->required();
    bo.attach(compare_cmd, true);

    auto* graph_cmd = app.add_subcommand("graph", "communication graph");
    graph_cmd->add_option("--system", system_file, "system file")->required();
    graph_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}))->capture_default_str();

    auto* size_cmd = app.add_subcommand("size", "size vector (n,m,m';p,q,q')");
    size_cmd->add_option("--system", system_file, "system file")->required();

    auto* convert_cmd = app.add_subcommand("convert", "switch between component and label form");
    convert_cmd->add_option("--system", system_file, "system file")->required();
    convert_cmd->add_option("--to", target, "labels or components")->required()->check(
        CLI::IsMember({"labels", "components"}));
    convert_cmd->add_option("-o,--output", output, "output file (default stdout)");

    auto* replay_cmd = app.add_subcommand("replay", "canonical trace of one rule group");
    replay_cmd->add_option("--system", system_file, "system file")->required();
    replay_cmd->add_option("--rule", rule_prefix, "production label (rule label prefix)")->required();
    replay_cmd->add_option("--form", form_text, "sentential form, space-separated")->required();

    std::vector<const char*> argv{"insdel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    if ((*enumerate_cmd) && grammar_file.empty() && system_file.empty()) {
        err << "enumerate: one of --grammar or --system is required\n";
        return usage;
    }

    try {
        if (*validate_cmd) {
            const std::string text = read_file(file);
            Diagnostics ds;
            switch (detect_kind(text)) {
                case FileKind::grammar: {
                    Grammar g = parse_grammar(text);
                    ds = g.kind == GrammarKind::geffert ? validate_geffert(g) : validate_special_gnf(g);
                    break;
                }
                case FileKind::component_system: ds = validate(parse_component_system(text)); break;
                case FileKind::label_system: ds = validate(parse_label_system(text)); break;
                case FileKind::unknown: err << "unrecognised file '" << file << "'\n"; return usage;
            }
            report(ds, err);
            if (has_errors(ds)) return negative;
            out << "valid\n";
            return ok;
        }

        if (*compile_cmd) {
            const SpecialGnfGrammar g = special_form(load_grammar(grammar_file), err);
            const CompilationOutput compiled = compile(g, static_cast<Construction>(construction));
            for (const auto& n : compiled.notes) err << "note: " << n << '\n';
            write_output(output, format_component_system(compiled.system), out);
            return ok;
        }

        if (*enumerate_cmd) {
            bo.bounds().check();
            EnumerationResult r;
            if (!grammar_file.empty()) {
                r = grammar_enumerate(load_grammar(grammar_file), bo.bounds());
            } else {
                const std::string text = read_file(system_file);
                switch (detect_kind(text)) {
                    case FileKind::component_system: r = enumerate(parse_component_system(text), bo.bounds()); break;
                    case FileKind::label_system: r = enumerate(parse_label_system(text), bo.bounds()); break;
                    default: err << "'" << system_file << "' is not a system file\n"; return usage;
                }
            }
            print_words(r.words, out);
            if (r.exhausted) {
                err << "visited budget exhausted after " << r.visited << " configurations; lower bound only\n";
                return exhausted;
            }
            return ok;
        }

        if (*member_cmd) {
            const ComponentSystem sys = load_component_system(system_file);
            const Word w = parse_word(word_text);
            if (!contains(sys.terminals, w)) {
                err << "member: the word must consist of terminal symbols\n";
                return usage;
            }
            bo.max_len = w.size();
            const Membership m = member(sys, w, bo.bounds());
            if (m.found()) {
                if (want_trace) out << to_json(*m.trace).dump(2) << '\n';
                else out << "found\n";
                return ok;
            }
            out << "not-found-within-bounds\n";
            if (m.exhausted) {
                err << "visited budget exhausted after " << m.visited << " configurations\n";
                return exhausted;
            }
            return negative;
        }

        if (*compare_cmd) {
            bo.bounds().check();
            const Grammar g = load_grammar(grammar_file);
            Diagnostics ds = validate_grammar(g);
            if (has_errors(ds)) {
                report(ds, err);
                return negative;
            }
            const ComparisonReport r = compare(g, load_component_system(system_file), bo.bounds());
            out << r.to_json().dump(2) << '\n';
            if (!r.resource_flags.empty()) return exhausted;
            return r.equal_up_to_bound() ? ok : negative;
        }

        if (*graph_cmd) {
            out << to_dot(communication_graph(load_component_system(system_file)));
            return ok;
        }

        if (*size_cmd) {
            const std::string text = read_file(system_file);
            switch (detect_kind(text)) {
                case FileKind::component_system: out << size_of(parse_component_system(text)).to_string() << '\n'; break;
                case FileKind::label_system: out << size_of(parse_label_system(text)).to_string() << '\n'; break;
                default: err << "'" << system_file << "' is not a system file\n"; return usage;
            }
            return ok;
        }

        if (*convert_cmd) {
            const std::string text = read_file(system_file);
            const FileKind kind = detect_kind(text);
            if (kind != FileKind::component_system && kind != FileKind::label_system) {
                err << "'" << system_file << "' is not a system file\n";
                return usage;
            }
            std::optional<LabelSystem> labels;
            if (kind == FileKind::component_system) {
                LabelConversion lc = to_label_form(parse_component_system(text));
                report(lc.notes, err);
                labels = std::move(lc.system);
            } else {
                labels = parse_label_system(text);
            }
            if (target == "labels") write_output(output, format_label_system(*labels), out);
            else write_output(output, format_component_system(to_component_form(*labels)), out);
            return ok;
        }

        if (*replay_cmd) {
            const ComponentSystem sys = load_component_system(system_file);
            const Trace t = replay_prefix(sys, rule_prefix, parse_word(form_text));
            out << to_json(t).dump(2) << '\n';
            return ok;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const GrammarError& e) {
        report(e.diagnostics(), err);
        return negative;
    } catch (const NoCanonicalTrace& e) {
        err << e.what() << '\n';
        return negative;
    } catch (const ConversionError& e) {
        err << "conversion: " << e.what() << '\n';
        return negative;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace insdel::cli
