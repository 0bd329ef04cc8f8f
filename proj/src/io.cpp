#include "fanlike/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "fanlike/error.hpp"

namespace fanlike {

using nlohmann::json;

namespace {

std::string strip_comments(std::string_view text) {
    std::string out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        out += line;
        out += '\n';
    }
    return out;
}

// Splits on whitespace, but keeps a braced face such as "{1, 10, 12}" whole.
std::vector<std::string> face_tokens(std::istream& in) {
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '{') {
            while (tok.back() != '}') {
                std::string more;
                if (!(in >> more)) fail(ErrorCode::ParseError, "unterminated face '" + tok + "'");
                tok += more;
            }
        }
        out.push_back(tok);
    }
    return out;
}

long long parse_int(const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
    }
    if (used != tok.size()) fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
    return v;
}

}  // namespace

PLSphere parse_cplx(std::string_view text) {
    std::istringstream in(strip_comments(text));
    std::string a, b;
    if (!(in >> a >> b)) fail(ErrorCode::ParseError, "CPLX: missing 'n m' header");
    long long n = parse_int(a);
    long long m = parse_int(b);
    if (n < 0 || m < 0 || m > kMaxVertices || n > m) {
        fail(ErrorCode::ParseError, "CPLX: bad header '" + a + " " + b + "'");
    }
    std::vector<Face> nonfaces;
    for (const auto& tok : face_tokens(in)) {
        Face f = parse_face(tok);
        if (f.max_vertex() > m) fail(ErrorCode::ParseError, "CPLX: face " + tok + " uses a label above m");
        nonfaces.push_back(f);
    }
    return PLSphere::from_min_nonfaces(static_cast<int>(n), static_cast<int>(m), std::move(nonfaces));
}

std::string print_cplx(const PLSphere& k) {
    std::string out = std::to_string(k.n()) + " " + std::to_string(k.m()) + "\n";
    bool first = true;
    for (Face f : k.min_nonfaces()) {
        if (!first) out += ' ';
        out += to_compact(f);
        first = false;
    }
    return out + "\n";
}

IntMatrix parse_matrix(std::string_view text) {
    std::istringstream in(strip_comments(text));
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() < 2) fail(ErrorCode::ParseError, "matrix: missing 'rows cols' header");
    long long rows = parse_int(toks[0]);
    long long cols = parse_int(toks[1]);
    if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096) fail(ErrorCode::ParseError, "matrix: bad shape");
    if (static_cast<long long>(toks.size()) - 2 != rows * cols) {
        fail(ErrorCode::ParseError, "matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                                        std::to_string(toks.size() - 2));
    }
    IntMatrix out(static_cast<int>(rows), static_cast<int>(cols));
    std::size_t i = 2;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            try {
                out(r, c) = BigInt(toks[i]);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "matrix: bad entry '" + toks[i] + "'");
            }
            ++i;
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PLSphere load_complex(const std::string& arg) {
    if (const CatalogEntry* e = find_entry(arg)) return e->sphere();
    return parse_cplx(read_file(arg));
}

IntMatrix load_matrix(const std::string& arg) {
    if (arg.find(';') == std::string::npos) return parse_matrix(read_file(arg));
    std::vector<std::string> rows;
    std::string cur;
    for (char c : arg) {
        if (c == ';') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rows.push_back(cur);
    std::istringstream first(rows.front());
    std::size_t cols = 0;
    std::string tok;
    while (first >> tok) ++cols;
    std::string text = std::to_string(rows.size()) + " " + std::to_string(cols) + "\n";
    for (const auto& r : rows) text += r + "\n";
    return parse_matrix(text);
}

json to_json(const IntMatrix& a) {
    json rows = json::array();
    for (int r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < a.cols(); ++c) {
            const BigInt& v = a(r, c);
            if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
                row.push_back(static_cast<std::int64_t>(v));
            } else {
                row.push_back(v.str());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "matrix JSON must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    IntMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[static_cast<std::size_t>(r)].size()) != cols) {
            fail(ErrorCode::ParseError, "ragged matrix JSON");
        }
        for (int c = 0; c < cols; ++c) {
            const json& v = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v.is_number_integer()) {
                out(r, c) = BigInt(v.get<std::int64_t>());
            } else if (v.is_string()) {
                out(r, c) = BigInt(v.get<std::string>());
            } else {
                fail(ErrorCode::ParseError, "matrix JSON entries must be integers");
            }
        }
    }
    return out;
}

json to_json(const PLSphere& k) {
    json faces = json::array();
    for (Face f : k.min_nonfaces()) faces.push_back(to_compact(f));
    return {{"n", k.n()}, {"m", k.m()}, {"min_nonfaces", faces}};
}

json to_json(const Verdict& v) {
    json out;
    out["status"] = to_string(v.status);
    out["bound"] = v.bound;
    json w = json::array();
    for (const auto& m : v.witnesses) w.push_back(to_json(m));
    out["witnesses"] = w;
    if (v.bad_link) {
        out["bad_link"] = {{"face", to_braced(v.bad_link->face)}, {"seed_id", v.bad_link->seed_id}};
    } else {
        out["bad_link"] = nullptr;
    }
    out["catalog_match"] = v.catalog_match.empty() ? json(nullptr) : json(v.catalog_match);
    out["stats"] = {{"nodes", v.stats.nodes}, {"time_ms", v.stats.time_ms}};
    return out;
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    try {
        const std::string status = j.at("status").get<std::string>();
        bool known = false;
        for (VerdictStatus s : {VerdictStatus::Fanlike, VerdictStatus::MinimallyNonFanlike,
                                VerdictStatus::NonFanlikeByLink, VerdictStatus::UnknownWithinBound}) {
            if (to_string(s) == status) {
                v.status = s;
                known = true;
            }
        }
        if (!known) fail(ErrorCode::ParseError, "unknown verdict status '" + status + "'");
        v.bound = j.at("bound").get<int>();
        for (const auto& m : j.at("witnesses")) v.witnesses.push_back(matrix_from_json(m));
        if (!j.at("bad_link").is_null()) {
            v.bad_link = BadLink{parse_face(j["bad_link"].at("face").get<std::string>()),
                                 j["bad_link"].at("seed_id").get<std::string>()};
        }
        if (!j.at("catalog_match").is_null()) v.catalog_match = j["catalog_match"].get<std::string>();
        v.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
        v.stats.time_ms = j["stats"].at("time_ms").get<double>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("verdict JSON: ") + e.what());
    }
    return v;
}

json to_json(const EntryReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"id", r.id}, {"pass", r.passed()}, {"checks", checks}, {"time_ms", r.time_ms}};
}

json to_json(const CatalogEntry& e) {
    json out;
    out["id"] = e.id;
    out["kind"] = to_string(e.kind);
    out["n"] = e.n;
    out["m"] = e.m;
    json faces = json::array();
    for (Face f : e.min_nonfaces) faces.push_back(to_compact(f));
    out["min_nonfaces"] = faces;
    json syms = json::array();
    for (const auto& g : e.symmetries) syms.push_back(g);
    out["symmetries"] = syms;
    json templates = json::array();
    for (const auto& t : e.templates) {
        int skip = t.identity_prefix ? t.n : 0;
        json rows = json::array();
        for (int r = 0; r < t.n; ++r) {
            std::string row;
            for (int c = skip; c < t.m; ++c) {
                if (c > skip) row += ' ';
                row += to_string(t.at(r, c));
            }
            rows.push_back(row);
        }
        templates.push_back(rows);
    }
    out["templates"] = templates;
    out["notes"] = e.notes;
    return out;
}

}  // namespace fanlike
