#pragma once

#include <json.hpp>

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/schur.hpp"

namespace qschur {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Text scanning with location-carrying errors.

namespace detail {

/// Cursor over a text input that reports parse failures with line/column.
class Scanner {
public:
    explicit Scanner(std::string s) : s_(std::move(s)) {}

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    char get() { return eof() ? '\0' : s_[pos_++]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long integer() {
        size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        size_t digits = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return std::stol(s_.substr(start, pos_ - start));
    }

    Rat rational() {
        size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (consume('/')) {
            size_t digits = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == digits) fail("expected denominator");
        }
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected rational number");
        Rat r(s_.substr(start, pos_ - start));
        r.canonicalize();
        return r;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        long line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + msg);
    }

private:
    std::string s_;
    size_t pos_ = 0;
};

inline long json_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected integer");
    return j.get<long>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Periodic matrices: JSON {"n":…,"diag":[…],"offdiag":[[i,t,value],…]} and
// the text form emitted by PeriodicMatrix::str().

inline json matrix_to_json(const PeriodicMatrix& A) {
    json off = json::array();
    for (const auto& [k, v] : A.offdiag()) off.push_back({k.first, k.second, v});
    return {{"n", A.n()}, {"diag", A.diag()}, {"offdiag", off}};
}

inline PeriodicMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("diag"))
        throw ParseError("matrix: expected object with \"n\" and \"diag\"");
    long n = detail::json_long(j["n"], "matrix n");
    if (n < 1) throw ParseError("matrix: n must be positive");
    const json& diag = j["diag"];
    if (!diag.is_array() || static_cast<long>(diag.size()) != n)
        throw ParseError("matrix: diag must have n entries");
    PeriodicMatrix A(n);
    for (long i = 0; i < n; ++i)
        A.set_entry(i + 1, i + 1, detail::json_long(diag[static_cast<size_t>(i)], "matrix diag"));
    for (const json& e : j.value("offdiag", json::array())) {
        if (!e.is_array() || e.size() != 3) throw ParseError("matrix: offdiag entry must be [i,t,value]");
        long i = detail::json_long(e[0], "offdiag row");
        long t = detail::json_long(e[1], "offdiag offset");
        long v = detail::json_long(e[2], "offdiag value");
        if (i < 1 || i > n) throw ParseError("matrix: offdiag row out of range");
        if (t == 0) throw ParseError("matrix: offdiag offset must be nonzero");
        A.add_entry(i, i + t, v);
    }
    return A;
}

inline std::string matrix_to_text(const PeriodicMatrix& A) { return A.str(); }

/// Parse `diag(d1,..,dn) + value*E^{i,j} + …` (the str() form).
inline PeriodicMatrix matrix_from_text(const std::string& text) {
    detail::Scanner sc(text);
    sc.skip_ws();
    for (char c : std::string("diag")) sc.expect(c);
    sc.expect('(');
    std::vector<long> diag;
    for (;;) {
        sc.skip_ws();
        diag.push_back(sc.integer());
        sc.skip_ws();
        if (sc.consume(')')) break;
        sc.expect(',');
    }
    PeriodicMatrix A(static_cast<long>(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i)
        A.set_entry(static_cast<long>(i) + 1, static_cast<long>(i) + 1, diag[i]);
    sc.skip_ws();
    while (sc.consume('+')) {
        sc.skip_ws();
        long val = 1;
        if (std::isdigit(static_cast<unsigned char>(sc.peek())) || sc.peek() == '-') {
            val = sc.integer();
            sc.skip_ws();
            sc.expect('*');
            sc.skip_ws();
        }
        sc.expect('E');
        sc.expect('^');
        sc.expect('{');
        long i = sc.integer();
        sc.expect(',');
        long jcol = sc.integer();
        sc.expect('}');
        if (i == jcol) sc.fail("off-diagonal entry on the diagonal");
        A.add_entry(i, jcol, val);
        sc.skip_ws();
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after matrix");
    return A;
}

// ---------------------------------------------------------------------------
// Laurent polynomials: canonical text `c*v^k` descending, parsed back.

inline std::string laurent_to_text(const LaurentPoly& f) { return f.str(); }

inline LaurentPoly laurent_from_text(const std::string& text) {
    detail::Scanner sc(text);
    sc.skip_ws();
    if (sc.consume('0')) {
        sc.skip_ws();
        if (sc.eof()) return LaurentPoly();
        sc.fail("trailing input after 0");
    }
    LaurentPoly f;
    for (;;) {
        sc.skip_ws();
        Rat c(1);
        bool have_coeff = false;
        if (sc.peek() != 'v') {
            c = sc.rational();
            have_coeff = true;
            sc.skip_ws();
        }
        long k = 0;
        if ((have_coeff && sc.consume('*')) || (!have_coeff && sc.peek() == 'v')) {
            sc.skip_ws();
            sc.expect('v');
            sc.expect('^');
            k = sc.integer();
        }
        f += LaurentPoly::monomial(c, k);
        sc.skip_ws();
        if (!sc.consume('+')) break;
    }
    if (!sc.eof()) sc.fail("trailing input after polynomial");
    return f;
}

// ---------------------------------------------------------------------------
// Algebra elements: {"n":…,"D":…,"terms":[{"matrix":…,"coeff":"…"}]}.

inline json elem_to_json(const AlgebraElem& x) {
    json terms = json::array();
    for (const auto& [A, c] : x.terms())
        terms.push_back({{"matrix", matrix_to_json(A)}, {"coeff", laurent_to_text(c)}});
    return {{"n", x.n()}, {"D", x.D()}, {"terms", terms}};
}

inline AlgebraElem elem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("D"))
        throw ParseError("element: expected object with \"n\" and \"D\"");
    AlgebraElem x(detail::json_long(j["n"], "element n"), detail::json_long(j["D"], "element D"));
    for (const json& t : j.value("terms", json::array())) {
        if (!t.is_object() || !t.contains("matrix") || !t.contains("coeff"))
            throw ParseError("element: term must have \"matrix\" and \"coeff\"");
        if (!t["coeff"].is_string()) throw ParseError("element: coeff must be a string");
        x.add_term(matrix_from_json(t["matrix"]),
                   laurent_from_text(t["coeff"].get<std::string>()));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Generator words: text grammar `E1^(2) F2 K(1,0,-1)`, read right-to-left as
// applied (vector order = text order, leftmost applied last), and the JSON
// form [["E",1,2],["F",2,1],["K",[1,0,-1]]].

inline std::string word_to_text(const GenWord& w) {
    std::string out;
    for (const auto& g : w) {
        if (!out.empty()) out += ' ';
        switch (g.kind) {
            case GenSymbol::E:
            case GenSymbol::F:
                out += (g.kind == GenSymbol::E ? 'E' : 'F');
                out += std::to_string(g.i);
                if (g.m != 1) out += "^(" + std::to_string(g.m) + ")";
                break;
            case GenSymbol::K: {
                out += "K(";
                for (long i = 1; i <= g.wt.n(); ++i)
                    out += (i > 1 ? "," : "") + std::to_string(g.wt(i));
                out += ')';
                break;
            }
        }
    }
    return out;
}

inline GenWord word_from_text(const std::string& text) {
    detail::Scanner sc(text);
    GenWord w;
    for (;;) {
        sc.skip_ws();
        if (sc.eof()) break;
        char kind = sc.get();
        if (kind == 'E' || kind == 'F') {
            long i = sc.integer();
            long m = 1;
            if (sc.consume('^')) {
                sc.expect('(');
                m = sc.integer();
                sc.expect(')');
            }
            if (m < 1) sc.fail("divided power must be positive");
            w.push_back(kind == 'E' ? GenSymbol::e(i, m) : GenSymbol::f(i, m));
        } else if (kind == 'K') {
            sc.expect('(');
            std::vector<long> a;
            for (;;) {
                sc.skip_ws();
                a.push_back(sc.integer());
                sc.skip_ws();
                if (sc.consume(')')) break;
                sc.expect(',');
            }
            w.push_back(GenSymbol::k(PeriodicVec(a)));
        } else {
            sc.fail("expected generator symbol E, F, or K");
        }
    }
    return w;
}

inline json word_to_json(const GenWord& w) {
    json out = json::array();
    for (const auto& g : w) {
        switch (g.kind) {
            case GenSymbol::E: out.push_back({"E", g.i, g.m}); break;
            case GenSymbol::F: out.push_back({"F", g.i, g.m}); break;
            case GenSymbol::K: {
                std::vector<long> a;
                for (long i = 1; i <= g.wt.n(); ++i) a.push_back(g.wt(i));
                out.push_back({"K", a});
                break;
            }
        }
    }
    return out;
}

inline GenWord word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word: expected array");
    GenWord w;
    for (const json& e : j) {
        if (!e.is_array() || e.empty() || !e[0].is_string())
            throw ParseError("word: symbol must be [\"E\"|\"F\"|\"K\", …]");
        std::string kind = e[0].get<std::string>();
        if (kind == "E" || kind == "F") {
            if (e.size() != 3) throw ParseError("word: E/F symbol must be [kind,i,m]");
            long i = detail::json_long(e[1], "word residue");
            long m = detail::json_long(e[2], "word power");
            if (m < 1) throw ParseError("word: divided power must be positive");
            w.push_back(kind == "E" ? GenSymbol::e(i, m) : GenSymbol::f(i, m));
        } else if (kind == "K") {
            if (e.size() != 2 || !e[1].is_array())
                throw ParseError("word: K symbol must be [\"K\",[a…]]");
            std::vector<long> a;
            for (const json& v : e[1]) a.push_back(detail::json_long(v, "word weight entry"));
            w.push_back(GenSymbol::k(PeriodicVec(a)));
        } else {
            throw ParseError("word: unknown symbol kind \"" + kind + "\"");
        }
    }
    return w;
}

/// Word with base weight: {"word":[…],"weight":[…]}.
inline json word_weight_to_json(const GenWord& w, const PeriodicVec& wt) {
    std::vector<long> a;
    for (long i = 1; i <= wt.n(); ++i) a.push_back(wt(i));
    return {{"word", word_to_json(w)}, {"weight", a}};
}

inline std::pair<GenWord, PeriodicVec> word_weight_from_json(const json& j) {
    if (!j.is_object() || !j.contains("word") || !j.contains("weight"))
        throw ParseError("expected object with \"word\" and \"weight\"");
    if (!j["weight"].is_array()) throw ParseError("weight must be an array");
    std::vector<long> a;
    for (const json& v : j["weight"]) a.push_back(detail::json_long(v, "weight entry"));
    return {word_from_json(j["word"]), PeriodicVec(a)};
}

}  // namespace qschur
