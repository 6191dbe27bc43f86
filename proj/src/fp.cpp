#include "classgraph/fp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace cg {

namespace {

std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

void append_word(std::vector<int>& dst, const std::vector<int>& w) {
    dst.insert(dst.end(), w.begin(), w.end());
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(normalize(text)) {}

    Presentation run() {
        Presentation p;
        skip_ws();
        eat_if('<');
        // Generator names.
        while (true) {
            skip_ws();
            std::string name = read_identifier();
            if (name.empty()) throw SyntaxError("expected generator name", pos_);
            if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
                throw SyntaxError("duplicate generator '" + name + "'", pos_);
            p.generators.push_back(std::move(name));
            skip_ws();
            if (eat_if(',')) continue;
            break;
        }
        gens_ = &p.generators;
        skip_ws();
        if (!eat_if('|')) throw SyntaxError("expected '|'", pos_);
        skip_ws();
        // Relations (possibly none).
        if (!at_end() && peek() != '>') {
            while (true) {
                std::vector<std::vector<int>> chain{parse_word()};
                skip_ws();
                while (eat_if('=')) {
                    chain.push_back(parse_word());
                    skip_ws();
                }
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                    std::vector<int> rel = chain[i];
                    append_word(rel, inverse_word(chain[i + 1]));
                    p.relators.push_back(std::move(rel));
                }
                if (chain.size() == 1) p.relators.push_back(std::move(chain[0]));
                skip_ws();
                if (eat_if(',')) continue;
                break;
            }
        }
        skip_ws();
        eat_if('>');
        skip_ws();
        if (!at_end()) throw SyntaxError("trailing input", pos_);
        return p;
    }

private:
    static std::string normalize(const std::string& text) {
        // Map the UTF-8 angle brackets U+27E8/U+27E9 and U+2329/U+232A to ASCII.
        std::string out;
        for (std::size_t i = 0; i < text.size();) {
            if (text.compare(i, 3, "\xe2\x9f\xa8") == 0 || text.compare(i, 3, "\xe2\x8c\xa9") == 0) {
                out += '<';
                i += 3;
            } else if (text.compare(i, 3, "\xe2\x9f\xa9") == 0 ||
                       text.compare(i, 3, "\xe2\x8c\xaa") == 0) {
                out += '>';
                i += 3;
            } else {
                out += text[i];
                ++i;
            }
        }
        return out;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool eat_if(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_identifier() {
        std::string out;
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) return out;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            out += s_[pos_++];
        return out;
    }

    /// Longest declared generator name starting here; -1 if none.
    int match_generator() {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < gens_->size(); ++i) {
            const std::string& name = (*gens_)[i];
            if (name.size() > best_len && s_.compare(pos_, name.size(), name) == 0) {
                best = static_cast<int>(i);
                best_len = name.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    bool starts_word() {
        if (at_end()) return false;
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
    }

    std::vector<int> parse_word() {
        std::vector<int> word;
        skip_ws();
        if (!starts_word()) throw SyntaxError("expected a word", pos_);
        while (starts_word()) {
            append_word(word, parse_factor());
            skip_ws();
        }
        return word;
    }

    std::vector<int> parse_factor() {
        std::vector<int> w = parse_atom();
        skip_ws();
        while (eat_if('^')) {
            skip_ws();
            if (at_end()) throw SyntaxError("dangling '^'", pos_);
            char c = peek();
            if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                long e = parse_integer();
                std::vector<int> base = e < 0 ? inverse_word(w) : w;
                long reps = e < 0 ? -e : e;
                std::vector<int> out;
                for (long i = 0; i < reps; ++i) append_word(out, base);
                w = std::move(out);
            } else {
                std::vector<int> v = parse_atom();
                std::vector<int> out = inverse_word(v);
                append_word(out, w);
                append_word(out, v);
                w = std::move(out);
            }
            skip_ws();
        }
        return w;
    }

    std::vector<int> parse_atom() {
        skip_ws();
        if (at_end()) throw SyntaxError("expected an atom", pos_);
        char c = peek();
        if (c == '1') {
            ++pos_;
            return {};
        }
        if (c == '(') {
            ++pos_;
            std::vector<int> w = parse_word();
            skip_ws();
            if (!eat_if(')')) throw SyntaxError("expected ')'", pos_);
            return w;
        }
        if (c == '[') {
            ++pos_;
            std::vector<int> u = parse_word();
            skip_ws();
            if (!eat_if(',')) throw SyntaxError("expected ',' in commutator", pos_);
            std::vector<int> v = parse_word();
            skip_ws();
            if (!eat_if(']')) throw SyntaxError("expected ']'", pos_);
            std::vector<int> out = inverse_word(u);
            append_word(out, inverse_word(v));
            append_word(out, u);
            append_word(out, v);
            return out;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            int g = match_generator();
            if (g < 0) {
                std::string name = read_identifier();
                throw UnknownGenerator("unknown generator '" + name + "'", start);
            }
            return {g + 1};
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    long parse_integer() {
        std::size_t start = pos_;
        bool neg = eat_if('-');
        long v = 0;
        bool any = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_++] - '0');
            any = true;
            if (v > 1000000) throw SyntaxError("exponent too large", start);
        }
        if (!any) throw SyntaxError("expected an integer exponent", start);
        return neg ? -v : v;
    }

    std::string s_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

Presentation parse_presentation(const std::string& text) { return Parser(text).run(); }

std::string unparse(const Presentation& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ", ";
        out += p.generators[i];
    }
    out += " | ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r) out += ", ";
        if (p.relators[r].empty()) out += "1";
        for (std::size_t i = 0; i < p.relators[r].size(); ++i) {
            if (i) out += ' ';
            int l = p.relators[r][i];
            out += p.generators[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
            if (l < 0) out += "^-1";
        }
    }
    out += " >";
    return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT), following the classic formulation: a partial coset
// table, relator scans that fill gaps, and a coincidence queue over a
// union-find of coset names. Compacted on close.

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& p, int max_cosets)
        : n_gens_(static_cast<int>(p.generators.size())), max_cosets_(max_cosets) {
        for (const auto& r : p.relators) relator_cols_.push_back(to_cols(r));
        add_coset();
    }

    void run(const std::vector<std::vector<int>>& subgroup_words) {
        for (const auto& w : subgroup_words) scan_and_fill(0, to_cols(w));
        for (int a = 0; a < static_cast<int>(tab_.size()); ++a) {
            if (!alive(a)) continue;
            for (const auto& r : relator_cols_) {
                scan_and_fill(a, r);
                if (!alive(a)) break;
            }
            if (!alive(a)) continue;
            for (int x = 0; x < 2 * n_gens_ && alive(a); ++x)
                if (entry(a, x) < 0) define(a, x);
        }
    }

    CosetTable compact() const {
        std::vector<int> new_name(tab_.size(), -1);
        int live = 0;
        for (int a = 0; a < static_cast<int>(tab_.size()); ++a)
            if (alive(a)) new_name[static_cast<std::size_t>(a)] = live++;
        CosetTable t;
        t.n_generators = n_gens_;
        t.rows.assign(static_cast<std::size_t>(live), std::vector<int>(static_cast<std::size_t>(2 * n_gens_), -1));
        for (int a = 0; a < static_cast<int>(tab_.size()); ++a) {
            if (!alive(a)) continue;
            for (int x = 0; x < 2 * n_gens_; ++x) {
                int b = entry(a, x);
                if (b < 0) throw Error("coset table not closed");
                t.rows[static_cast<std::size_t>(new_name[static_cast<std::size_t>(a)])]
                      [static_cast<std::size_t>(x)] = new_name[static_cast<std::size_t>(rep(b))];
            }
        }
        return t;
    }

private:
    // Column encoding: letter +-(i+1) -> 2i (generator) or 2i+1 (inverse).
    static int col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int inv_col(int x) { return x ^ 1; }
    std::vector<int> to_cols(const std::vector<int>& word) const {
        std::vector<int> out;
        out.reserve(word.size());
        for (int l : word) out.push_back(col_of(l));
        return out;
    }

    bool alive(int a) const { return parent_[static_cast<std::size_t>(a)] == a; }
    int rep(int a) const {
        while (parent_[static_cast<std::size_t>(a)] != a) {
            parent_[static_cast<std::size_t>(a)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
            a = parent_[static_cast<std::size_t>(a)];
        }
        return a;
    }

    int& entry(int a, int x) { return tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]; }
    int entry(int a, int x) const {
        return tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
    }

    int add_coset() {
        if (live_ >= max_cosets_)
            throw CosetLimitExceeded("coset enumeration exceeded " + std::to_string(max_cosets_) +
                                     " cosets");
        tab_.emplace_back(static_cast<std::size_t>(2 * n_gens_), -1);
        parent_.push_back(static_cast<int>(tab_.size()) - 1);
        ++live_;
        return static_cast<int>(tab_.size()) - 1;
    }

    int define(int a, int x) {
        int b = add_coset();
        entry(a, x) = b;
        entry(b, inv_col(x)) = a;
        return b;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        --live_;
        dead_queue_.push_back(b);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!dead_queue_.empty()) {
            int y = dead_queue_.front();
            dead_queue_.pop_front();
            for (int x = 0; x < 2 * n_gens_; ++x) {
                int d = entry(y, x);
                if (d < 0) continue;
                // Detach the mirrored entry, then replay the edge at the reps.
                if (entry(d, inv_col(x)) == y) entry(d, inv_col(x)) = -1;
                int mu = rep(y), nu = rep(d);
                int ex = entry(mu, x);
                int en = entry(nu, inv_col(x));
                if (ex >= 0) {
                    merge(nu, ex);
                } else if (en >= 0) {
                    merge(mu, en);
                } else {
                    entry(mu, x) = nu;
                    entry(nu, inv_col(x)) = mu;
                }
            }
        }
    }

    void scan_and_fill(int a, const std::vector<int>& word) {
        if (word.empty()) return;
        a = rep(a);
        int i = 0, j = static_cast<int>(word.size()) - 1;
        int f = a, b = a;
        while (true) {
            // Scan forward as far as defined.
            while (i <= j && entry(f, word[static_cast<std::size_t>(i)]) >= 0) {
                f = rep(entry(f, word[static_cast<std::size_t>(i)]));
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            // Scan backward.
            while (j >= i && entry(b, inv_col(word[static_cast<std::size_t>(j)])) >= 0) {
                b = rep(entry(b, inv_col(word[static_cast<std::size_t>(j)])));
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                // Deduction: one missing entry bridges the scan.
                entry(f, word[static_cast<std::size_t>(i)]) = b;
                entry(b, inv_col(word[static_cast<std::size_t>(i)])) = f;
                return;
            }
            define(f, word[static_cast<std::size_t>(i)]);
        }
    }

    int n_gens_;
    int max_cosets_;
    int live_ = 0;
    std::vector<std::vector<int>> relator_cols_;
    std::vector<std::vector<int>> tab_;
    mutable std::vector<int> parent_;
    std::deque<int> dead_queue_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<std::vector<int>>& subgroup_words,
                        int max_cosets) {
    if (max_cosets < 1) throw InputError("max_cosets must be >= 1");
    for (const auto& w : p.relators)
        for (int l : w)
            if (l == 0 || std::abs(l) > static_cast<int>(p.generators.size()))
                throw InputError("relator letter out of range");
    Enumerator e(p, max_cosets);
    e.run(subgroup_words);
    return e.compact();
}

FiniteGroup realize(const Presentation& p, const CosetTable& table, std::string label) {
    int n = table.cosets();
    std::vector<Perm> gens;
    for (int i = 0; i < table.n_generators; ++i) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            img[static_cast<std::size_t>(c)] =
                table.rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * i)];
        gens.emplace_back(std::move(img));
    }
    // Every relator must act trivially on the cosets.
    for (const auto& r : p.relators) {
        Perm acc = Perm::identity(n);
        for (int l : r) {
            const Perm& g = gens[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
            acc = (l > 0 ? g : g.inverse()) * acc;
        }
        if (!(acc == Perm::identity(n))) throw Error("relator does not act trivially on cosets");
    }
    FiniteGroup g = FiniteGroup::from_generators(std::move(label), std::move(gens));
    return g;
}

FiniteGroup realize_presentation(const std::string& text, std::string label, int max_cosets) {
    Presentation p = parse_presentation(text);
    CosetTable t = todd_coxeter(p, {}, max_cosets);
    return realize(p, t, std::move(label));
}

}  // namespace cg
