#include "fanlike/templates.hpp"

#include <cctype>
#include <sstream>

#include "fanlike/error.hpp"

namespace fanlike {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

bool AffineForm::is_constant() const noexcept {
    for (long long c : coeff) {
        if (c != 0) return false;
    }
    return true;
}

std::string to_string(const AffineForm& f) {
    std::string out;
    for (int i = 0; i < kMaxIndeterminates; ++i) {
        long long c = f.coeff[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += "x" + std::to_string(i);
    }
    if (f.constant != 0 || out.empty()) {
        if (f.constant > 0 && !out.empty()) out += '+';
        out += std::to_string(f.constant);
    }
    return out;
}

AffineForm parse_affine(std::string_view text) {
    AffineForm out;
    std::size_t pos = 0;
    if (text.empty()) parse_fail(text, 0, "empty entry");
    bool first = true;
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            parse_fail(text, pos, "expected '+' or '-'");
        }
        first = false;
        if (pos >= text.size()) parse_fail(text, pos, "dangling sign");
        long long number = 1;
        bool has_number = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            number = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                if (number > 100000000000LL) parse_fail(text, pos, "number too large");
                number = number * 10 + (text[pos] - '0');
                ++pos;
            }
            has_number = true;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                if (pos >= text.size() || text[pos] != 'x') parse_fail(text, pos, "expected variable after '*'");
            } else {
                out.constant += sign * number;
                continue;
            }
        }
        if (pos >= text.size() || text[pos] != 'x') {
            parse_fail(text, pos, has_number ? "expected variable" : "expected number or variable");
        }
        ++pos;
        int index = 0;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            index = text[pos] - '0';
            if (index >= kMaxIndeterminates) parse_fail(text, pos, "only x0..x3 are allowed");
            ++pos;
        }
        out.coeff[static_cast<std::size_t>(index)] += sign * number;
    }
    return out;
}

std::vector<int> TemplateMatrix::indeterminates() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxIndeterminates; ++i) {
        for (const auto& e : entries) {
            if (e.coeff[static_cast<std::size_t>(i)] != 0) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

TemplateMatrix with_identity_prefix(const TemplateMatrix& block) {
    TemplateMatrix out;
    out.n = block.n;
    out.m = block.m + block.n;
    out.identity_prefix = true;
    for (int r = 0; r < block.n; ++r) {
        for (int c = 0; c < block.n; ++c) out.entries.push_back(AffineForm::value(r == c ? 1 : 0));
        for (int c = 0; c < block.m; ++c) out.entries.push_back(block.at(r, c));
    }
    return out;
}

TemplateMatrix template_from_rows(const std::vector<std::string>& rows) {
    TemplateMatrix out;
    out.n = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        auto toks = split_ws(row);
        if (out.m == 0) out.m = static_cast<int>(toks.size());
        if (static_cast<int>(toks.size()) != out.m || toks.empty()) {
            fail(ErrorCode::ParseError, "template row '" + row + "' has " + std::to_string(toks.size()) +
                                            " entries, expected " + std::to_string(out.m));
        }
        for (const auto& tok : toks) out.entries.push_back(parse_affine(tok));
    }
    // The flag follows the data: a leading identity block marks the prefix.
    bool prefix = out.m >= out.n && out.n > 0;
    for (int r = 0; r < out.n && prefix; ++r) {
        for (int c = 0; c < out.n && prefix; ++c) prefix = out.at(r, c) == AffineForm::value(r == c ? 1 : 0);
    }
    out.identity_prefix = prefix;
    return out;
}

CharMatrix instantiate(const TemplateMatrix& t, const std::vector<long long>& values) {
    for (int i : t.indeterminates()) {
        if (static_cast<int>(values.size()) <= i) {
            fail(ErrorCode::MissingValue, "no value for x" + std::to_string(i));
        }
    }
    CharMatrix out(t.n, t.m);
    for (int r = 0; r < t.n; ++r) {
        for (int c = 0; c < t.m; ++c) {
            const AffineForm& f = t.at(r, c);
            BigInt v = f.constant;
            for (int i = 0; i < kMaxIndeterminates; ++i) {
                long long k = f.coeff[static_cast<std::size_t>(i)];
                if (k != 0) v += BigInt(k) * values[static_cast<std::size_t>(i)];
            }
            out(r, c) = std::move(v);
        }
    }
    return out;
}

void sweep(const TemplateMatrix& t, int bound,
           const std::function<bool(const std::vector<long long>&, const CharMatrix&)>& visit) {
    if (bound < 0) fail(ErrorCode::ParseError, "negative sweep bound");
    std::vector<int> used = t.indeterminates();
    std::vector<long long> values(kMaxIndeterminates, 0);
    for (int i : used) values[static_cast<std::size_t>(i)] = -bound;
    for (;;) {
        if (!visit(values, instantiate(t, values))) return;
        int pos = static_cast<int>(used.size()) - 1;
        while (pos >= 0) {
            auto& v = values[static_cast<std::size_t>(used[static_cast<std::size_t>(pos)])];
            if (v < bound) {
                ++v;
                break;
            }
            v = -bound;
            --pos;
        }
        if (pos < 0) return;
    }
}

std::vector<CharMatrix> sweep_all(const TemplateMatrix& t, int bound) {
    std::vector<CharMatrix> out;
    sweep(t, bound, [&](const std::vector<long long>&, const CharMatrix& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

TemplateMatrix parse_template(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (split_ws(line).empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) fail(ErrorCode::ParseError, "template has no rows");
    return template_from_rows(rows);
}

std::string print_template(const TemplateMatrix& t) {
    std::string out;
    for (int r = 0; r < t.n; ++r) {
        for (int c = 0; c < t.m; ++c) {
            if (c) out += ' ';
            out += to_string(t.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace fanlike
