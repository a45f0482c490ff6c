#include "gorhom/io.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gorhom/errors.h"

namespace gorhom {

namespace {

struct Line {
    int number = 0;       // 1-based
    std::string text;     // comment stripped
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        bool blank = raw.find_first_not_of(" \t") == std::string::npos;
        if (!blank) out.push_back({number, raw});
    }
    return out;
}

/* Single-line scanner; columns are 1-based byte offsets. */
struct Scanner {
    const Line& line;
    size_t pos = 0;

    explicit Scanner(const Line& l) : line(l) {}

    int col() const { return (int)pos + 1; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line.number, col(), msg);
    }
    void skip_ws() {
        while (pos < line.text.size() && (line.text[pos] == ' ' || line.text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.text.size();
    }
    char peek() {
        skip_ws();
        return pos < line.text.size() ? line.text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < line.text.size() && line.text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    /* Identifier: letters, digits, '_', '.', not starting with a digit. */
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < line.text.size() &&
               (std::isalnum((unsigned char)line.text[pos]) || line.text[pos] == '_' ||
                line.text[pos] == '.'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return line.text.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < line.text.size() && (line.text[pos] == '-' || line.text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < line.text.size() && std::isdigit((unsigned char)line.text[pos])) ++pos;
        if (pos == digits) {
            pos = start;
            fail("expected an integer");
        }
        std::string tok = line.text.substr(start, pos - start);
        if (tok.size() > 15) fail("integer literal too large");
        return std::stoll(tok);
    }
    bool integer_ahead() {
        skip_ws();
        size_t q = pos;
        if (q < line.text.size() && (line.text[q] == '-' || line.text[q] == '+')) ++q;
        return q < line.text.size() && std::isdigit((unsigned char)line.text[q]);
    }
    std::string rest() {
        skip_ws();
        std::string r = line.text.substr(pos);
        while (!r.empty() && (r.back() == ' ' || r.back() == '\t')) r.pop_back();
        pos = line.text.size();
        return r;
    }
};

std::string keyword_of(const Line& l) {
    size_t start = l.text.find_first_not_of(" \t");
    size_t colon = l.text.find(':', start);
    size_t space = l.text.find_first_of(" \t", start);
    size_t end = std::min(colon == std::string::npos ? l.text.size() : colon,
                          space == std::string::npos ? l.text.size() : space);
    return l.text.substr(start, end - start);
}

uint32_t reduce_coeff(long long c, uint32_t p) {
    long long r = c % (long long)p;
    if (r < 0) r += p;
    return (uint32_t)r;
}

struct RawTerm {
    long long coeff = 1;
    std::vector<std::string> labels;
    int line = 0, col = 0;
};
using RawRelation = std::vector<RawTerm>;

RawRelation parse_relation_expr(Scanner& s) {
    RawRelation rel;
    long long sign = 1;
    if (s.consume('-')) sign = -1;
    while (true) {
        RawTerm term;
        s.skip_ws();
        term.line = s.line.number;
        term.col = s.col();
        term.coeff = sign;
        bool first = true;
        while (true) {
            if (s.integer_ahead()) {
                long long c = s.integer();
                if (term.coeff > 1000000 || term.coeff < -1000000 || c > 1000000 ||
                    c < -1000000)
                    s.fail("coefficient too large");
                term.coeff *= c;
            } else {
                term.labels.push_back(s.ident());
            }
            first = false;
            if (!s.consume('*')) break;
        }
        (void)first;
        if (term.labels.empty()) s.fail("relation term needs at least one arrow");
        rel.push_back(std::move(term));
        if (s.consume('+')) {
            sign = 1;
        } else if (s.consume('-')) {
            sign = -1;
        } else {
            break;
        }
    }
    return rel;
}

PathWord word_of_labels(const Quiver& q, const RawTerm& term) {
    PathWord w;
    bool started = false;
    for (const std::string& label : term.labels) {
        int a = q.arrow_index(label);
        if (a < 0) throw ParseError(term.line, term.col, "unknown arrow '" + label + "'");
        if (!started) {
            w.source = q.arrows[a].source;
            w.target = q.arrows[a].source;
            started = true;
        }
        if (q.arrows[a].source != w.target)
            throw ParseError(term.line, term.col,
                             "arrows do not compose at '" + label + "'");
        w.arrows.push_back(a);
        w.target = q.arrows[a].target;
    }
    return w;
}

}  // namespace

ParsedAlgebra parse_algebra_text(const std::string& text, uint32_t fallback_char) {
    std::vector<Line> lines = logical_lines(text);

    ParsedAlgebra out;
    out.characteristic = fallback_char;
    std::vector<std::pair<RawRelation, int>> raw_relations;
    bool saw_vertices = false;

    for (const Line& l : lines) {
        std::string key = keyword_of(l);
        Scanner s(l);
        if (key == "vertices") {
            if (saw_vertices) s.fail("duplicate vertices line");
            saw_vertices = true;
            s.pos = l.text.find("vertices") + 8;
            s.expect(':', "after 'vertices'");
            while (!s.at_end()) {
                std::string id = s.ident();
                if (out.quiver.vertex_index(id) >= 0)
                    throw ParseError(l.number, s.col(), "duplicate vertex '" + id + "'");
                out.quiver.vertices.push_back(id);
            }
            if (out.quiver.vertices.empty()) s.fail("vertices line lists no vertices");
        } else if (key == "arrow") {
            if (!saw_vertices) s.fail("arrow line before vertices line");
            s.pos = l.text.find("arrow") + 5;
            std::string label = s.ident();
            if (out.quiver.arrow_index(label) >= 0)
                s.fail("duplicate arrow '" + label + "'");
            s.expect(':', "after the arrow label");
            std::string src = s.ident();
            s.expect('-', "in '->'");
            s.expect('>', "in '->'");
            std::string tgt = s.ident();
            if (!s.at_end()) s.fail("trailing text after arrow declaration");
            int si = out.quiver.vertex_index(src);
            int ti = out.quiver.vertex_index(tgt);
            if (si < 0) s.fail("unknown vertex '" + src + "'");
            if (ti < 0) s.fail("unknown vertex '" + tgt + "'");
            out.quiver.arrows.push_back(Arrow{label, si, ti});
        } else if (key == "relations") {
            s.pos = l.text.find("relations") + 9;
            s.expect(':', "after 'relations'");
            while (!s.at_end()) {
                raw_relations.emplace_back(parse_relation_expr(s), l.number);
                if (!s.consume(',')) {
                    if (!s.at_end()) s.fail("expected ',' between relations");
                }
            }
        } else if (key == "char") {
            if (out.char_from_file) s.fail("duplicate char line");
            s.pos = l.text.find("char") + 4;
            s.expect(':', "after 'char'");
            long long p = s.integer();
            if (!s.at_end()) s.fail("trailing text after characteristic");
            if (p < 2) s.fail("characteristic must be at least 2");
            out.characteristic = (uint32_t)p;
            out.char_from_file = true;
        } else {
            throw ParseError(l.number, (int)l.text.find_first_not_of(" \t") + 1,
                             "unknown directive '" + key + "'");
        }
    }
    if (!saw_vertices) throw ParseError(1, 1, "missing vertices line");

    for (auto& [raw, line] : raw_relations) {
        PathSum rel;
        for (const RawTerm& term : raw) {
            uint32_t c = reduce_coeff(term.coeff, out.characteristic);
            PathWord w = word_of_labels(out.quiver, term);
            if (c) rel.terms.emplace_back(c, w);
        }
        (void)line;
        if (!rel.empty()) out.relations.push_back(std::move(rel));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraPtr load_algebra_file(const std::string& path, uint32_t fallback_char, int length_cap) {
    ParsedAlgebra parsed = parse_algebra_text(read_text_file(path), fallback_char);
    return build_algebra(std::move(parsed.quiver), std::move(parsed.relations),
                         parsed.characteristic, length_cap);
}

namespace {

const Line& header_line(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, 1, "missing 'module over' header");
    return lines[0];
}

std::string header_ref(const Line& l) {
    Scanner s(l);
    if (l.text.find("module") == std::string::npos) s.fail("expected 'module over <file>'");
    s.pos = l.text.find("module") + 6;
    s.skip_ws();
    if (l.text.compare(s.pos, 4, "over") != 0) s.fail("expected 'over' after 'module'");
    s.pos += 4;
    std::string ref = s.rest();
    if (ref.empty()) s.fail("missing algebra reference");
    return ref;
}

Mat parse_matrix(Scanner& s, int rows, int cols, uint32_t p) {
    Mat m(rows, cols, p);
    s.expect('[', "to open the matrix");
    int r = 0;
    if (!s.consume(']')) {
        do {
            if (r >= rows) s.fail("matrix has more than " + std::to_string(rows) + " rows");
            s.expect('[', "to open a row");
            int c = 0;
            if (!s.consume(']')) {
                do {
                    if (c >= cols)
                        s.fail("row has more than " + std::to_string(cols) + " entries");
                    m.at(r, c) = reduce_coeff(s.integer(), p);
                    ++c;
                } while (s.consume(','));
                s.expect(']', "to close the row");
            }
            if (c != cols)
                s.fail("row has " + std::to_string(c) + " entries, expected " +
                       std::to_string(cols));
            ++r;
        } while (s.consume(','));
        s.expect(']', "to close the matrix");
    }
    if (r != rows)
        s.fail("matrix has " + std::to_string(r) + " rows, expected " + std::to_string(rows));
    return m;
}

}  // namespace

std::string module_algebra_ref(const std::string& text) {
    std::vector<Line> lines = logical_lines(text);
    return header_ref(header_line(lines));
}

Representation parse_module_text(const std::string& text, AlgebraPtr algebra) {
    std::vector<Line> lines = logical_lines(text);
    header_ref(header_line(lines)); // syntax check only
    const Quiver& q = algebra->quiver();
    uint32_t p = algebra->characteristic();

    std::vector<int> dims;
    bool saw_dims = false;
    std::vector<Mat> action(q.num_arrows());
    std::vector<bool> arrow_seen(q.num_arrows(), false);

    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        std::string key = keyword_of(l);
        Scanner s(l);
        if (key == "dims") {
            if (saw_dims) s.fail("duplicate dims line");
            saw_dims = true;
            s.pos = l.text.find("dims") + 4;
            s.expect(':', "after 'dims'");
            while (!s.at_end()) {
                long long d = s.integer();
                if (d < 0) s.fail("dimensions must be nonnegative");
                dims.push_back((int)d);
            }
            if ((int)dims.size() != q.num_vertices())
                s.fail("expected " + std::to_string(q.num_vertices()) +
                       " dimensions, got " + std::to_string(dims.size()));
        } else if (key == "arrow") {
            if (!saw_dims) s.fail("arrow line before dims line");
            s.pos = l.text.find("arrow") + 5;
            std::string label = s.ident();
            int a = q.arrow_index(label);
            if (a < 0) s.fail("unknown arrow '" + label + "'");
            if (arrow_seen[a]) s.fail("duplicate matrix for arrow '" + label + "'");
            arrow_seen[a] = true;
            s.expect(':', "after the arrow label");
            action[a] = parse_matrix(s, dims[q.arrows[a].target], dims[q.arrows[a].source], p);
            if (!s.at_end()) s.fail("trailing text after matrix");
        } else {
            throw ParseError(l.number, (int)l.text.find_first_not_of(" \t") + 1,
                             "unknown directive '" + key + "'");
        }
    }
    if (!saw_dims) throw ParseError(1, 1, "missing dims line");
    for (int a = 0; a < q.num_arrows(); ++a)
        if (!arrow_seen[a])
            action[a] = Mat(dims[q.arrows[a].target], dims[q.arrows[a].source], p);
    return make_representation(std::move(algebra), std::move(dims), std::move(action));
}

Representation load_module_file(const std::string& path, uint32_t fallback_char,
                                int length_cap) {
    std::string text = read_text_file(path);
    std::filesystem::path ref(module_algebra_ref(text));
    if (ref.is_relative()) ref = std::filesystem::path(path).parent_path() / ref;
    AlgebraPtr alg = load_algebra_file(ref.string(), fallback_char, length_cap);
    return parse_module_text(text, std::move(alg));
}

Representation load_module_file(const std::string& path, AlgebraPtr algebra) {
    return parse_module_text(read_text_file(path), std::move(algebra));
}

std::string format_algebra(const BoundQuiverAlgebra& alg) {
    const Quiver& q = alg.quiver();
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : q.vertices) out << ' ' << v;
    out << '\n';
    for (const Arrow& a : q.arrows)
        out << "arrow " << a.label << ": " << q.vertices[a.source] << " -> "
            << q.vertices[a.target] << '\n';
    if (!alg.relations().empty()) {
        out << "relations: ";
        bool first_rel = true;
        for (const PathSum& rel : alg.relations()) {
            if (!first_rel) out << ", ";
            first_rel = false;
            bool first_term = true;
            for (const auto& [c, w] : rel.terms) {
                if (!first_term) out << " + ";
                first_term = false;
                if (c != 1) out << c << '*';
                for (size_t k = 0; k < w.arrows.size(); ++k) {
                    if (k) out << '*';
                    out << q.arrows[w.arrows[k]].label;
                }
            }
        }
        out << '\n';
    }
    out << "char: " << alg.characteristic() << '\n';
    return out.str();
}

std::string format_module(const Representation& rep, const std::string& algebra_ref) {
    const Quiver& q = rep.algebra->quiver();
    std::ostringstream out;
    out << "module over " << algebra_ref << '\n';
    out << "dims:";
    for (int d : rep.dims) out << ' ' << d;
    out << '\n';
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Mat& m = rep.action[a];
        out << "arrow " << q.arrows[a].label << ": [";
        for (int r = 0; r < m.rows; ++r) {
            if (r) out << ',';
            out << '[';
            for (int c = 0; c < m.cols; ++c) {
                if (c) out << ',';
                out << m.at(r, c);
            }
            out << ']';
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace gorhom
