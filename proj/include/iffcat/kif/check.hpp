#pragma once

#include <fstream>

#include "iffcat/kif/eval.hpp"
#include "iffcat/kif/standard_model.hpp"

namespace iffcat::kif {

enum class Verdict { True, False, Skipped, Error };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Skipped: return "skipped";
        case Verdict::Error: return "error";
    }
    return "?";
}

struct SentenceReport {
    std::string text;  // printed form of the sentence
    int line = 0;
    Verdict verdict = Verdict::Error;
    std::string detail; // falsifying assignment or error message
};

struct CheckReport {
    std::vector<SentenceReport> sentences;

    size_t count(Verdict v) const {
        size_t n = 0;
        for (const auto& s : sentences)
            if (s.verdict == v) ++n;
        return n;
    }
    bool all_true() const { return count(Verdict::False) == 0 && count(Verdict::Error) == 0; }
};

/// Evaluate each top-level form against the model. Vocabulary declarations
/// are reported as skipped; evaluation errors never abort the run.
inline CheckReport check_forms(const KifModel& model, const std::vector<SExpr>& forms) {
    CheckReport report;
    for (const SExpr& form : forms) {
        SentenceReport r;
        r.text = print(form);
        r.line = form.line;
        if (is_declaration(form)) {
            r.verdict = Verdict::Skipped;
            report.sentences.push_back(std::move(r));
            continue;
        }
        try {
            ExprPtr sentence = analyze(form);
            Evaluator ev(model);
            bool ok = ev.eval_sentence(sentence);
            r.verdict = ok ? Verdict::True : Verdict::False;
            if (!ok) r.detail = ev.witness();
        } catch (const Error& e) {
            r.verdict = Verdict::Error;
            r.detail = e.what();
        }
        report.sentences.push_back(std::move(r));
    }
    return report;
}

inline CheckReport check_text(const KifModel& model, const std::string& text) {
    return check_forms(model, parse(text));
}

inline CheckReport check_file(const KifModel& model, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open KIF file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return check_text(model, buf.str());
}

} // namespace iffcat::kif
