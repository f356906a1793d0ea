#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ctslab/counter.hpp"
#include "ctslab/one_state.hpp"
#include "ctslab/oracle.hpp"
#include "ctslab/parikh.hpp"
#include "ctslab/parse.hpp"
#include "ctslab/petri.hpp"
#include "ctslab/shape.hpp"
#include "ctslab/validate.hpp"
#include "json.hpp"

using namespace ctslab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

CtsSystem load_system(const std::string& path) {
    return parse_system(read_file(path));
}

bool single_char_terminals(const std::vector<std::string>& terminals) {
    for (const auto& t : terminals) {
        if (t.size() != 1) return false;
    }
    return true;
}

// Words are concatenated single characters when every terminal is one
// character; `~` stands for the empty word. Token files take over otherwise.
Word parse_word(const std::string& compact, const std::string& word_file,
                const std::vector<std::string>& terminals) {
    Word word;
    if (!word_file.empty()) {
        std::istringstream in(read_file(word_file));
        std::string tok;
        while (in >> tok) word.push_back(tok);
        return word;
    }
    if (compact == "~" || compact.empty()) return word;
    if (!single_char_terminals(terminals))
        throw std::runtime_error(
            "system has multi-character terminals; pass the word via --word-file");
    for (char c : compact) word.push_back(std::string(1, c));
    return word;
}

std::string word_display(const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += word[i];
    }
    return out.empty() ? "~" : out;
}

OracleLimits limits_from_env(std::size_t word_len) {
    OracleLimits lim = default_limits(word_len);
    if (const char* env = std::getenv("CTSLAB_MAX_FRONTIER")) {
        lim.max_frontier = static_cast<std::size_t>(std::stoull(env));
    }
    return lim;
}

enum class Algo { Auto, Oracle, Parikh, Counter, Fast };

Algo pick_auto(const SystemShape& shape) {
    if (is_one_state_family(shape.family)) return Algo::Fast;
    if (shape.family == Family::RL_0S && shape.real_time) return Algo::Parikh;
    if (is_counter_family(shape.family)) return Algo::Counter;
    return Algo::Oracle;
}

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Auto: return "auto";
        case Algo::Oracle: return "oracle";
        case Algo::Parikh: return "parikh";
        case Algo::Counter: return "counter";
        case Algo::Fast: return "fast";
    }
    return "?";
}

struct MemberOutcome {
    Verdict verdict = Verdict::Rejected;
    std::string algorithm;
    std::vector<std::string> witness;
    std::string limit;
    std::optional<std::string> fast_case;
};

MemberOutcome run_member(const CtsSystem& sys, const Word& word, Algo algo,
                         bool want_witness, std::optional<long long> cap) {
    SystemShape shape = classify_shape(sys);
    if (algo == Algo::Auto) algo = pick_auto(shape);
    if (want_witness) algo = Algo::Oracle;  // witnesses come from the search

    MemberOutcome out;
    out.algorithm = algo_name(algo);
    switch (algo) {
        case Algo::Oracle: {
            OracleVerdict v = oracle_member(sys, word, limits_from_env(word.size()));
            out.verdict = v.status;
            out.witness = v.witness;
            switch (v.limit_hit) {
                case LimitKind::None: break;
                case LimitKind::Form2Size: out.limit = "form2-size"; break;
                case LimitKind::Steps: out.limit = "steps"; break;
                case LimitKind::Frontier: out.limit = "frontier"; break;
            }
            break;
        }
        case Algo::Parikh:
            out.verdict = recognize_rt_0s(sys, word) ? Verdict::Accepted : Verdict::Rejected;
            break;
        case Algo::Counter:
            out.verdict =
                counter_member(sys, word, cap) ? Verdict::Accepted : Verdict::Rejected;
            break;
        case Algo::Fast: {
            FastResult f = fast_member(sys, word);
            out.verdict = f.accepted ? Verdict::Accepted : Verdict::Rejected;
            out.fast_case = case_id_name(f.case_id);
            if (f.delegated) out.algorithm = "fast+counter";
            break;
        }
        case Algo::Auto: break;
    }
    return out;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return kExitAccepted;
        case Verdict::Rejected: return kExitRejected;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int cmd_validate(const std::string& file) {
    CtsSystem sys = load_system(file);
    ValidationReport rep = validate_system(sys);
    if (rep.ok()) {
        std::cout << "valid: " << sys.name << " (" << sys.rewrites.size()
                  << " rewrites)\n";
        return kExitAccepted;
    }
    for (const auto& v : rep.violations) {
        std::cout << violation_code_name(v.code)
                  << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    }
    return kExitUsage;
}

int cmd_classify(const std::string& file, const std::string& word_arg,
                 const std::string& word_file) {
    CtsSystem sys = load_system(file);
    SystemShape shape = classify_shape(sys);

    ordered_json j;
    j["system"] = sys.name;
    j["family"] = family_name(shape.family);
    j["real_time"] = shape.real_time;
    j["g1_nonterminals"] = shape.g1_nt_count;
    j["g2_nonterminals"] = shape.g2_nt_count;
    if (!shape.bottom_symbol.empty()) j["bottom_symbol"] = shape.bottom_symbol;
    if (!shape.counter_symbol.empty()) j["counter_symbol"] = shape.counter_symbol;

    if (is_one_state_family(shape.family)) {
        try {
            RuleProfile profile = classify_rules(sys);
            ordered_json rules;
            for (const auto& rw : sys.rewrites) {
                const RuleType& t = profile.per_rewrite.at(rw.id);
                rules[rw.id] = t.terminal.empty()
                                   ? rule_kind_name(t.kind)
                                   : rule_kind_name(t.kind) + "(" + t.terminal + ")";
            }
            j["rules"] = std::move(rules);
            TerminalPartition part = terminal_partition(profile);
            j["partition"] = {{"push_only", part.push_only},
                              {"pop_only", part.pop_only},
                              {"mixed", part.mixed}};
            if (!word_arg.empty() || !word_file.empty()) {
                Word word = parse_word(word_arg, word_file, sys.g1.terminals);
                j["word"] = word_display(word);
                j["case"] = case_id_name(detect_case(profile, word));
                try {
                    SegmentProfile sp = segment_profile(profile, word);
                    ordered_json segs;
                    segs["eta_push"] = sp.eta3;
                    segs["eta_pop"] = sp.eta5;
                    segs["balance"] = segment_balance_check(sp);
                    j["segments"] = std::move(segs);
                } catch (const UnproducibleTerminal&) {
                    j["segments"] = nullptr;
                }
            }
        } catch (const UnclassifiableRewrite& e) {
            j["rules_error"] = e.what();
        }
    }
    std::cout << j.dump(2) << "\n";
    return kExitAccepted;
}

int cmd_member(const std::string& file, const std::string& word_arg,
               const std::string& word_file, const std::string& algo_arg,
               bool witness, bool json, std::optional<long long> cap) {
    CtsSystem sys = load_system(file);
    ValidationReport rep = validate_system(sys);
    if (!rep.ok()) throw std::runtime_error("system fails validation; run `validate`");
    Word word = parse_word(word_arg, word_file, sys.g1.terminals);

    Algo algo = Algo::Auto;
    if (algo_arg == "oracle") algo = Algo::Oracle;
    else if (algo_arg == "parikh") algo = Algo::Parikh;
    else if (algo_arg == "counter") algo = Algo::Counter;
    else if (algo_arg == "fast") algo = Algo::Fast;
    else if (algo_arg != "auto") throw std::runtime_error("unknown --algo " + algo_arg);

    auto start = std::chrono::steady_clock::now();
    MemberOutcome out = run_member(sys, word, algo, witness, cap);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();

    if (json) {
        ordered_json j;
        j["command"] = "member";
        j["system"] = sys.name;
        j["word"] = word_display(word);
        j["algorithm"] = out.algorithm;
        j["verdict"] = verdict_name(out.verdict);
        if (out.fast_case) j["case"] = *out.fast_case;
        if (witness) j["witness"] = out.witness;
        j["timing_ms"] = ms;
        j["limits_hit"] = out.limit.empty() ? ordered_json(nullptr) : ordered_json(out.limit);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict_name(out.verdict) << " (" << out.algorithm << ")\n";
        if (witness && out.verdict == Verdict::Accepted) {
            std::cout << "witness:";
            for (const auto& id : out.witness) std::cout << " " << id;
            std::cout << "\n";
        }
        if (!out.limit.empty()) std::cout << "limit hit: " << out.limit << "\n";
    }
    return verdict_exit(out.verdict);
}

int cmd_enumerate(const std::string& file, std::size_t max_len, bool json) {
    CtsSystem sys = load_system(file);
    Enumeration e = enumerate_language(sys, max_len, limits_from_env(max_len));
    if (json) {
        ordered_json j;
        j["command"] = "enumerate";
        j["system"] = sys.name;
        j["max_len"] = max_len;
        j["words"] = ordered_json::array();
        for (const auto& word : e.words) j["words"].push_back(word_display(word));
        j["complete"] = e.complete;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& word : e.words) std::cout << word_display(word) << "\n";
        if (!e.complete) std::cout << "# incomplete: some words were inconclusive\n";
    }
    return e.complete ? kExitAccepted : kExitInconclusive;
}

int cmd_diagram(const std::string& file, const std::string& dot_path,
                const std::string& json_path) {
    CtsSystem sys = load_system(file);
    StateDiagram d = build_state_diagram(sys);
    if (!dot_path.empty()) write_file(dot_path, diagram_to_dot(d, sys.name));
    if (!json_path.empty()) write_file(json_path, diagram_to_json(d, sys.name));
    if (dot_path.empty() && json_path.empty()) std::cout << diagram_to_dot(d, sys.name);
    return kExitAccepted;
}

int cmd_to_pn(const std::string& file, const std::string& out_path) {
    CtsSystem sys = load_system(file);
    PetriNet net = cts_to_pn(sys);
    std::string text = render_pn(net);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    return kExitAccepted;
}

int cmd_pn_member(const std::string& file, const std::string& word_arg,
                  const std::string& word_file, const std::string& semantics) {
    PetriNet net = parse_pn(read_file(file));
    std::vector<std::string> labels;
    for (const auto& t : net.transitions)
        if (!t.label.empty()) labels.push_back(t.label);
    Word word = parse_word(word_arg, word_file, labels);
    PnSemantics sem;
    if (semantics == "any") sem = PnSemantics::AnyMarking;
    else if (semantics == "final") sem = PnSemantics::FinalMarkings;
    else throw std::runtime_error("--semantics must be any or final");
    bool accepted = pn_member(net, word, sem);
    std::cout << (accepted ? "accepted" : "rejected") << "\n";
    return accepted ? kExitAccepted : kExitRejected;
}

int cmd_crosscheck(const std::string& file, std::size_t max_len,
                   std::optional<long long> cap) {
    CtsSystem sys = load_system(file);
    SystemShape shape = classify_shape(sys);

    bool use_parikh = shape.family == Family::RL_0S && shape.real_time;
    bool use_counter = is_counter_family(shape.family);
    bool use_fast = is_one_state_family(shape.family);

    std::size_t checked = 0, inconclusive = 0;
    std::vector<Word> frontier{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& word : frontier) {
            OracleVerdict o = oracle_member(sys, word, limits_from_env(word.size()));
            if (o.status == Verdict::Inconclusive) {
                ++inconclusive;
                continue;
            }
            bool expect = o.status == Verdict::Accepted;
            auto report = [&](const char* name, bool got) {
                if (got == expect) return true;
                std::cout << "DISAGREE word=" << word_display(word) << " oracle="
                          << (expect ? "accepted" : "rejected") << " " << name << "="
                          << (got ? "accepted" : "rejected") << "\n";
                return false;
            };
            if (use_parikh && !report("parikh", recognize_rt_0s(sys, word)))
                return kExitRejected;
            if (use_counter && !report("counter", counter_member(sys, word, cap)))
                return kExitRejected;
            if (use_fast && !report("fast", fast_member(sys, word).accepted))
                return kExitRejected;
            ++checked;
        }
        if (len == max_len) break;
        std::vector<Word> next;
        for (const auto& word : frontier) {
            for (const auto& t : sys.g1.terminals) {
                Word ext = word;
                ext.push_back(t);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::cout << "ALL-AGREE words=" << checked;
    if (inconclusive) std::cout << " inconclusive=" << inconclusive;
    std::cout << "\n";
    return inconclusive ? kExitInconclusive : kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-component coordinated substitution systems toolkit"};
    app.require_subcommand(1);

    std::string file, word_arg, word_file, algo = "auto", semantics = "final";
    std::string dot_path, json_path, out_path;
    std::size_t max_len = 8;
    long long cap_arg = -1;
    bool witness = false, json = false;

    auto add_word_opts = [&](CLI::App* cmd) {
        cmd->add_option("--word", word_arg,
                        "word, concatenated single-char symbols (~ = empty)");
        cmd->add_option("--word-file", word_file,
                        "file with whitespace-separated symbols");
    };

    auto* validate = app.add_subcommand("validate", "check a system file");
    validate->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "report family, rules and case (JSON)");
    classify->add_option("file", file)->required();
    add_word_opts(classify);

    auto* member = app.add_subcommand("member", "decide membership of a word");
    member->add_option("file", file)->required();
    add_word_opts(member);
    member->add_option("--algo", algo, "auto|oracle|parikh|counter|fast");
    member->add_flag("--witness", witness, "derive a witness (oracle)");
    member->add_flag("--json", json, "JSON report");
    member->add_option("--counter-cap", cap_arg, "counter cap override");

    auto* enumerate = app.add_subcommand("enumerate", "list the language up to a length");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--max-len", max_len, "maximum word length")->required();
    enumerate->add_flag("--json", json, "JSON report");

    auto* diagram = app.add_subcommand("diagram", "export the counter state diagram");
    diagram->add_option("file", file)->required();
    diagram->add_option("--dot", dot_path, "DOT output path");
    diagram->add_option("--json", json_path, "JSON output path");

    auto* topn = app.add_subcommand("to-pn", "encode a 0-sequential system as a net");
    topn->add_option("file", file)->required();
    topn->add_option("-o,--output", out_path, "output path");

    auto* pnmember = app.add_subcommand("pn-member", "decide membership on a net file");
    pnmember->add_option("file", file)->required();
    add_word_opts(pnmember);
    pnmember->add_option("--semantics", semantics, "any|final");

    auto* crosscheck = app.add_subcommand(
        "crosscheck", "run every applicable recognizer on every word");
    crosscheck->add_option("file", file)->required();
    crosscheck->add_option("--max-len", max_len, "maximum word length")->required();
    crosscheck->add_option("--counter-cap", cap_arg, "counter cap override");

    CLI11_PARSE(app, argc, argv);

    std::optional<long long> cap;
    if (cap_arg >= 0) cap = cap_arg;

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (classify->parsed()) return cmd_classify(file, word_arg, word_file);
        if (member->parsed())
            return cmd_member(file, word_arg, word_file, algo, witness, json, cap);
        if (enumerate->parsed()) return cmd_enumerate(file, max_len, json);
        if (diagram->parsed()) return cmd_diagram(file, dot_path, json_path);
        if (topn->parsed()) return cmd_to_pn(file, out_path);
        if (pnmember->parsed()) return cmd_pn_member(file, word_arg, word_file, semantics);
        if (crosscheck->parsed()) return cmd_crosscheck(file, max_len, cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
