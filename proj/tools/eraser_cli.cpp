// Command-line front end over the library: eraser evaluation, surface
// coding, membership engines, enumeration, oracle-vs-machine comparison,
// plus-closure decomposition, and Wadge plays.
//
// Exit codes: 0 success (rejects and UNDEFINED are data), 1 engine
// disagreement in `compare`, 2 usage error, 3 inconclusive search.

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eraser/eraser.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace eraser;

namespace {

bool g_json = false;

void emit(const json& j, const std::string& text) {
    if (g_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string code_word(int j) {
    std::string s = "A";
    s += std::string(j, 'B');
    s += std::string(j, 'C');
    s += std::string(j, 'D');
    s += std::string(j, 'E');
    s += 'Z';
    return s;
}

struct Engines {
    Pda b = build_b();
    std::unique_ptr<Cfg> grammar;  // built on demand

    const Cfg& cyk_grammar() {
        if (!grammar) grammar = std::make_unique<Cfg>(cnf(to_cfg(normalize(b))));
        return *grammar;
    }

    // verdict for a surface word under one engine
    Verdict member(const std::string& engine, const EncodedWord& e,
                   SearchResult* cert = nullptr) {
        if (engine == "oracle") return oracle_member_b(e) ? Verdict::Accept : Verdict::Reject;
        if (engine == "pda-search") {
            SearchResult r = accepts_search(b, e);
            if (cert) *cert = r;
            return r.verdict;
        }
        if (engine == "pda-cyk")
            return cyk_member(cyk_grammar(), e) ? Verdict::Accept : Verdict::Reject;
        throw CLI::ValidationError("unknown engine " + engine);
    }
};

int cmd_erase(const std::string& word_text, int cascade_n) {
    Word w = parse_symbolic(word_text);
    int max_index = cascade_n;
    if (max_index == 0)
        for (const Symbol& s : w.syms)
            if (s.is_eraser()) max_index = std::max(max_index, s.value);
    json stages = json::array();
    std::string text;
    if (max_index == 0) {
        emit({{"result", render_symbolic(w)}, {"stages", stages}},
             "result: " + render_symbolic(w));
        return 0;
    }
    CascadeTrace tr = erase_cascade(w, max_index);
    for (const auto& [k, o] : tr.stages) {
        if (o.is_defined) {
            stages.push_back({{"eraser", k}, {"word", render_symbolic(o.result)}});
            text += "stage " + std::to_string(k) + ": " + render_symbolic(o.result) + "\n";
        } else {
            stages.push_back({{"eraser", k}, {"undefined_at", o.position}});
            text += "stage " + std::to_string(k) + ": UNDEFINED@" +
                    std::to_string(o.position) + "\n";
        }
    }
    json out{{"stages", stages}};
    if (tr.final.is_defined) {
        out["result"] = render_symbolic(tr.final.result);
        text += "result: " + render_symbolic(tr.final.result);
    } else {
        out["undefined_at"] = tr.final.position;
        text += "UNDEFINED@" + std::to_string(tr.final.position);
    }
    emit(out, text);
    return 0;
}

int cmd_wrongcode(const EncodedWord& e) {
    json toks = json::array();
    std::string text;
    for (const Token& t : tokenize(e)) {
        json j{{"begin", t.begin}, {"end", t.end}};
        std::string kind;
        switch (t.kind) {
            case Token::Kind::Letter:
                kind = "letter";
                j["value"] = t.value;
                break;
            case Token::Kind::EraserCode:
                kind = "eraser";
                j["index"] = t.value;
                break;
            case Token::Kind::Malformed:
                kind = "malformed";
                break;
        }
        j["kind"] = kind;
        toks.push_back(j);
        text += kind + "[" + std::to_string(t.begin) + ".." + std::to_string(t.end) +
                "]" + (t.kind == Token::Kind::Malformed ? "" : "=" + std::to_string(t.value)) +
                "\n";
    }
    bool wrong = has_wrong_code(e);
    emit({{"tokens", toks}, {"wrong_code", wrong}},
         text + (wrong ? "WRONG-CODE" : "CLEAN"));
    return 0;
}

int cmd_member(Engines& eng, const std::string& engine, const EncodedWord& e,
               bool want_cert) {
    SearchResult cert;
    Verdict v = eng.member(engine, e, &cert);
    if (v == Verdict::Inconclusive) {
        emit({{"verdict", "inconclusive"}}, "INCONCLUSIVE");
        return 3;
    }
    json out{{"verdict", v == Verdict::Accept ? "accept" : "reject"}};
    std::string text = v == Verdict::Accept ? "ACCEPT" : "REJECT";
    if (want_cert && engine == "pda-search" && v == Verdict::Accept) {
        json steps = json::array();
        for (std::size_t i = 0; i < cert.certificate.size(); ++i) {
            const Configuration& c = cert.certificate[i];
            std::string stack;
            for (int s : c.stack) stack += (stack.empty() ? "" : " ") + eng.b.stack_names[s];
            char consumed = cert.consumed[i];
            steps.push_back({{"state", eng.b.state_names[c.state]},
                             {"pos", c.input_position},
                             {"stack", stack},
                             {"read", consumed == kEpsilon ? "eps" : std::string(1, consumed)}});
            text += "\n" + eng.b.state_names[c.state] + " @" +
                    std::to_string(c.input_position) + " [" + stack + "]" +
                    (consumed == kEpsilon ? "" : std::string(" <- ") + consumed);
        }
        out["certificate"] = steps;
    }
    emit(out, text);
    return 0;
}

int cmd_enumerate(Engines& eng, const std::string& engine, std::size_t max_len) {
    auto members = enumerate_members(
        [&](const std::string& w) { return eng.member(engine, w) == Verdict::Accept; },
        kSurfaceAlphabet, max_len);
    std::string text;
    json out = json::array();
    for (const auto& m : members) {
        out.push_back(m);
        text += m + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit({{"members", out}}, text);
    return 0;
}

int cmd_compare(Engines& eng, std::size_t max_len, std::size_t random_count,
                int max_index, std::uint64_t seed, std::size_t raw_max_len) {
    std::size_t total = 0, disagreements = 0, inconclusive = 0;
    std::vector<std::string> examples;

    auto check = [&](const std::string& w) {
        bool oracle = oracle_member_b(w);
        SearchResult r = accepts_search(eng.b, w);
        ++total;
        if (r.verdict == Verdict::Inconclusive) {
            ++inconclusive;
            return;
        }
        if ((r.verdict == Verdict::Accept) != oracle) {
            ++disagreements;
            if (examples.size() < 10) examples.push_back(w);
        }
    };

    // exhaustive over the raw surface alphabet
    for (std::size_t len = 0; len <= raw_max_len; ++len) {
        std::string w(len, '0');
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            check(w);
            std::size_t i = len;
            while (i > 0 && ++idx[i - 1] == kSurfaceAlphabet.size()) {
                idx[i - 1] = 0;
                w[i - 1] = kSurfaceAlphabet[0];
                --i;
            }
            if (i == 0) break;
            w[i - 1] = kSurfaceAlphabet[idx[i - 1]];
        }
    }

    // exhaustive over token-structured words: letters and correct codes
    std::vector<std::string> toks = {"0", "1"};
    for (int j = 1; j <= 2; ++j) toks.push_back(code_word(j));
    std::function<void(const std::string&)> rec = [&](const std::string& cur) {
        if (!cur.empty()) check(cur);
        for (const auto& t : toks)
            if (cur.size() + t.size() <= max_len) rec(cur + t);
    };
    rec("");

    // random structured samples: letters, codes up to max_index, injected
    // wrong codes
    std::mt19937_64 rng(seed);
    for (std::size_t it = 0; it < random_count; ++it) {
        std::string w;
        std::size_t target = 1 + rng() % 12;
        for (std::size_t tok = 0; tok < target; ++tok) {
            std::size_t pick = rng() % 10;
            if (pick < 4) {
                w += static_cast<char>('0' + rng() % 2);
            } else if (pick < 9) {
                w += code_word(1 + rng() % max_index);
            } else {
                std::string c = code_word(1 + rng() % max_index);
                switch (rng() % 3) {
                    case 0:
                        c.insert(1 + rng() % (c.size() - 1), 1, "BCDE"[rng() % 4]);
                        break;
                    case 1:
                        c.erase(1 + rng() % (c.size() - 1), 1);
                        break;
                    default:
                        c = c.substr(0, 1 + rng() % (c.size() - 1));
                }
                w += c;
            }
        }
        check(w);
    }

    double pct = total ? 100.0 * (total - disagreements - inconclusive) / total : 100.0;
    json out{{"total", total},
             {"disagreements", disagreements},
             {"inconclusive", inconclusive},
             {"agreement_percent", pct},
             {"examples", examples}};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", pct);
    std::string text = "agreement " + std::string(buf) + "% (" + std::to_string(total) +
                       " words, " + std::to_string(disagreements) + " disagreements, " +
                       std::to_string(inconclusive) + " inconclusive)";
    for (const auto& e : examples) text += "\n  disagree: " + e;
    emit(out, text);
    if (disagreements > 0) return 1;
    if (inconclusive > 0) return 3;
    return 0;
}

int cmd_decompose(const EncodedWord& e) {
    auto splits = decompose_power(e, [](const std::string& s) { return oracle_member_b(s); });
    if (!splits) {
        emit({{"splits", nullptr}}, "NONE");
        return 0;
    }
    json arr = json::array();
    std::string text;
    for (std::size_t p : *splits) {
        arr.push_back(p);
        text += (text.empty() ? "" : " ") + std::to_string(p);
    }
    emit({{"splits", arr}, {"trivial", e.empty()}}, text + (e.empty() ? " (trivial)" : ""));
    return 0;
}

int cmd_wadge(const std::string& strategy, const std::string& script_text,
              std::size_t rounds, bool do_check) {
    Word script = parse_symbolic(script_text);
    Strategy strat;
    if (strategy == "shift")
        strat = shift_strategy();
    else if (strategy == "copy")
        strat = copy_rename_strategy({});
    else
        throw CLI::ValidationError("unknown strategy " + strategy);
    if (rounds == 0) rounds = script.size();
    Play play = run_play(script.syms, strat, rounds);
    json out{{"x_I", render_symbolic(play.x_i())}, {"x_II", render_symbolic(play.x_ii())}};
    std::string skip_mask;
    for (const auto& [mi, mii] : play.rounds) skip_mask += mii.skip ? '1' : '0';
    out["skip_mask"] = skip_mask;
    std::string text = "x_I : " + render_symbolic(play.x_i()) + "\nx_II: " +
                       render_symbolic(play.x_ii()) + "\nskip: " + skip_mask;
    if (do_check && strategy == "shift") {
        bool ok = check_shift_invariant(play);
        out["shift_invariant"] = ok;
        text += std::string("\nshift invariant: ") + (ok ? "holds" : "VIOLATED");
    }
    emit(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eraser-language toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable JSON-lines output");

    std::string word_text, encoded, engine = "oracle", strategy = "shift";
    int cascade_n = 0, max_index = 4;
    std::size_t max_len = 6, random_count = 0, rounds = 0, raw_max_len = 4;
    std::uint64_t seed = 0;
    bool want_cert = false, do_check = false;

    auto* erase = app.add_subcommand("erase", "evaluate erasers in a symbolic word");
    erase->add_option("--word", word_text)->required();
    erase->add_option("--cascade", cascade_n);

    auto* enc = app.add_subcommand("encode", "symbolic word to surface form");
    enc->add_option("--word", word_text)->required();

    auto* dec = app.add_subcommand("decode", "surface form to symbolic word");
    dec->add_option("--encoded", encoded)->required();

    auto* wrong = app.add_subcommand("wrongcode", "tokenize and report wrong codes");
    wrong->add_option("--encoded", encoded)->required();

    auto* mem = app.add_subcommand("member", "membership in the machine language");
    mem->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "pda-search", "pda-cyk"}));
    mem->add_option("--encoded", encoded)->required();
    mem->add_flag("--certificate", want_cert);

    auto* enumc = app.add_subcommand("enumerate", "list members up to a length");
    enumc->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "pda-search", "pda-cyk"}));
    enumc->add_option("--max-len", max_len);

    auto* cmp = app.add_subcommand("compare", "oracle vs machine agreement report");
    cmp->add_option("--max-len", max_len);
    cmp->add_option("--raw-max-len", raw_max_len);
    cmp->add_option("--random", random_count);
    cmp->add_option("--max-index", max_index)->check(CLI::Range(1, 6));
    cmp->add_option("--seed", seed);

    auto* dcp = app.add_subcommand("decompose", "plus-closure split points");
    dcp->add_option("--encoded", encoded)->required();

    auto* wad = app.add_subcommand("wadge", "run a Wadge play against a strategy");
    wad->add_option("--strategy", strategy)->check(CLI::IsMember({"shift", "copy"}));
    wad->add_option("--script", word_text)->required();
    wad->add_option("--rounds", rounds);
    wad->add_flag("--check", do_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Engines eng;
        if (erase->parsed()) return cmd_erase(word_text, cascade_n);
        if (enc->parsed()) {
            EncodedWord e = eraser::encode(parse_symbolic(word_text));
            emit({{"encoded", e}}, e);
            return 0;
        }
        if (dec->parsed()) {
            std::string s = render_symbolic(eraser::decode(encoded));
            emit({{"word", s}}, s);
            return 0;
        }
        if (wrong->parsed()) return cmd_wrongcode(encoded);
        if (mem->parsed()) return cmd_member(eng, engine, encoded, want_cert);
        if (enumc->parsed()) return cmd_enumerate(eng, engine, max_len);
        if (cmp->parsed())
            return cmd_compare(eng, max_len, random_count, max_index, seed, raw_max_len);
        if (dcp->parsed()) return cmd_decompose(encoded);
        if (wad->parsed()) return cmd_wadge(strategy, word_text, rounds, do_check);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
