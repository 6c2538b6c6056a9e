#include "momilp/problem_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "momilp/errors.hpp"

namespace momilp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

Rational parse_coeff(const std::string& tok, int line) {
    try {
        return parse_rational(tok);
    } catch (const InputError& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace

MomilpProblem parse_problem_text(const std::string& text) {
    MomilpProblem p;
    p.k = 0;
    bool rows_started = false;
    int obj_rows = 0;
    int line_no = 0;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& head = tok[0];

        if (head == "objectives") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: objectives <count>");
            try {
                p.k = std::stoi(tok[1]);
            } catch (...) {
                throw ParseError(line_no, "objective count is not an integer");
            }
            if (p.k < 2) throw ParseError(line_no, "at least two objectives are required");
        } else if (head == "var") {
            if (rows_started) throw ParseError(line_no, "variables must be declared before obj/con rows");
            if (tok.size() < 3) throw ParseError(line_no, "expected: var <name> int|cont <lower> <upper>");
            Variable v;
            v.name = tok[1];
            for (const auto& existing : p.variables) {
                if (existing.name == v.name) throw ParseError(line_no, "duplicate variable '" + v.name + "'");
            }
            if (tok[2] == "int") {
                v.integer = true;
            } else if (tok[2] == "cont") {
                v.integer = false;
            } else {
                throw ParseError(line_no, "variable kind must be 'int' or 'cont'");
            }
            if (v.integer && tok.size() != 5) {
                throw ParseError(line_no, "integer variable requires finite bounds");
            }
            if (!v.integer && tok.size() != 5) {
                throw ParseError(line_no, "expected: var <name> cont <lower> <upper>");
            }
            auto parse_bound = [&](const std::string& t) -> std::optional<Rational> {
                if (t == "-inf" || t == "inf") {
                    if (v.integer) throw ParseError(line_no, "integer variable requires finite bounds");
                    return std::nullopt;
                }
                return parse_coeff(t, line_no);
            };
            v.lower = parse_bound(tok[3]);
            v.upper = parse_bound(tok[4]);
            if (v.integer && (!is_integer(*v.lower) || !is_integer(*v.upper))) {
                throw ParseError(line_no, "integer variable bounds must be integers");
            }
            if (v.lower && v.upper && *v.lower > *v.upper) {
                throw ParseError(line_no, "lower bound exceeds upper bound");
            }
            p.variables.push_back(std::move(v));
        } else if (head == "obj") {
            rows_started = true;
            if (p.variables.empty()) throw ParseError(line_no, "obj row before any variable");
            if (tok.size() != p.variables.size() + 1) {
                throw ParseError(line_no, "obj row needs one coefficient per variable");
            }
            Vec row;
            for (std::size_t i = 1; i < tok.size(); ++i) row.push_back(parse_coeff(tok[i], line_no));
            p.objectives.push_back(std::move(row));
            ++obj_rows;
        } else if (head == "con") {
            rows_started = true;
            if (p.variables.empty()) throw ParseError(line_no, "con row before any variable");
            if (tok.size() != p.variables.size() + 3) {
                throw ParseError(line_no, "con row needs coefficients, a relation and a right-hand side");
            }
            Constraint con;
            for (std::size_t i = 1; i + 2 < tok.size(); ++i) con.coeffs.push_back(parse_coeff(tok[i], line_no));
            const std::string& rel = tok[tok.size() - 2];
            if (rel == "<=") {
                con.rel = Relation::LessEqual;
            } else if (rel == "=") {
                con.rel = Relation::Equal;
            } else if (rel == ">=") {
                con.rel = Relation::GreaterEqual;
            } else {
                throw ParseError(line_no, "relation must be <=, = or >=");
            }
            con.rhs = parse_coeff(tok.back(), line_no);
            p.constraints.push_back(std::move(con));
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }

    if (p.k == 0) throw ParseError(0, "missing 'objectives' declaration");
    if (p.variables.empty()) throw ParseError(0, "no variables declared");
    if (obj_rows != p.k) {
        throw ParseError(0, "expected " + std::to_string(p.k) + " obj rows, found " + std::to_string(obj_rows));
    }
    p.num_primary_vars = p.num_vars();
    try {
        p.validate();
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
    return p;
}

MomilpProblem parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

namespace {

void emit_slice(std::ostream& os, const Slice& slice) {
    os << '[';
    for (std::size_t i = 0; i < slice.values.size(); ++i) {
        if (i) os << ',';
        os << slice.values[i];
    }
    os << ']';
}

const char* strategy_name(CollectStrategy s) {
    return s == CollectStrategy::Exhaustive ? "exhaustive" : "milp";
}

} // namespace

std::string serialize_candidates(const CandidateSet& candidates) {
    std::ostringstream os;
    os << "{\"k\":" << candidates.k << ",\"strategy\":\"" << strategy_name(candidates.strategy)
       << "\",\"pieces\":[";
    for (std::size_t i = 0; i < candidates.pieces.size(); ++i) {
        const auto& piece = candidates.pieces[i];
        if (i) os << ',';
        os << "{\"piece_id\":" << piece.piece_id << ",\"slice\":";
        emit_slice(os, piece.slice);
        os << ",\"polytope\":" << piece.polytope.to_json() << '}';
    }
    os << "]}";
    return os.str();
}

std::string serialize_carved(const CarvedSet& carved) {
    std::ostringstream os;
    os << "{\"k\":" << carved.k << ",\"pieces\":[";
    for (std::size_t i = 0; i < carved.pieces.size(); ++i) {
        const auto& piece = carved.pieces[i];
        if (i) os << ',';
        os << "{\"piece_id\":" << piece.piece_id << ",\"parent_piece_id\":" << piece.parent_piece_id
           << ",\"slice\":";
        emit_slice(os, piece.slice);
        os << ",\"polytope\":" << piece.polytope.to_json() << '}';
    }
    os << "]}";
    return os.str();
}

std::string serialize_front(const ParetoFront& front) {
    std::ostringstream os;
    os << "{\"k\":" << front.k << ",\"regions\":[";
    for (std::size_t i = 0; i < front.regions.size(); ++i) {
        const auto& region = front.regions[i];
        if (i) os << ',';
        os << "{\"piece_id\":" << region.piece_id << ",\"slice\":";
        emit_slice(os, region.slice);
        os << ",\"base\":" << region.base.to_json() << ",\"removals\":[";
        for (std::size_t r = 0; r < region.removals.size(); ++r) {
            const auto& rem = region.removals[r];
            if (r) os << ',';
            os << "{\"generator_piece_id\":" << rem.generator_piece_id
               << ",\"polytope\":" << rem.polytope.to_json() << ",\"generator\":" << rem.generator.to_json()
               << '}';
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

namespace {

// Tiny JSON-subset reader (objects, arrays, big integers) for the formats
// this library writes.
struct Reader {
    const std::string& s;
    std::size_t pos = 0;

    explicit Reader(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) {
            throw InputError(std::string("front parse: expected '") + c + "' at offset " + std::to_string(pos));
        }
        ++pos;
    }
    std::string key() {
        expect('"');
        std::string k;
        while (pos < s.size() && s[pos] != '"') k += s[pos++];
        expect('"');
        expect(':');
        return k;
    }
    std::string string_value() {
        expect('"');
        std::string v;
        while (pos < s.size() && s[pos] != '"') v += s[pos++];
        expect('"');
        return v;
    }
    BigInt integer() {
        skip_ws();
        std::string digits;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') digits += s[pos++];
        if (digits.empty() || digits == "-" || digits == "+") throw InputError("front parse: expected integer");
        return BigInt(digits);
    }
    Rational rational_pair() {
        expect('[');
        BigInt num = integer();
        expect(',');
        BigInt den = integer();
        expect(']');
        return make_rational(num, den);
    }
    Vec vec() {
        expect('[');
        Vec v;
        if (!peek(']')) {
            v.push_back(rational_pair());
            while (peek(',')) {
                expect(',');
                v.push_back(rational_pair());
            }
        }
        expect(']');
        return v;
    }
    std::vector<Vec> vec_list() {
        expect('[');
        std::vector<Vec> out;
        if (!peek(']')) {
            out.push_back(vec());
            while (peek(',')) {
                expect(',');
                out.push_back(vec());
            }
        }
        expect(']');
        return out;
    }
    Slice slice() {
        expect('[');
        Slice sl;
        if (!peek(']')) {
            sl.values.push_back(integer().convert_to<long long>());
            while (peek(',')) {
                expect(',');
                sl.values.push_back(integer().convert_to<long long>());
            }
        }
        expect(']');
        return sl;
    }
    Polytope polytope() {
        expect('{');
        int dim = -1;
        std::vector<Vec> vertices;
        std::vector<Vec> rays;
        bool first = true;
        while (!peek('}')) {
            if (!first) expect(',');
            first = false;
            const std::string k = key();
            if (k == "dim") {
                dim = integer().convert_to<int>();
            } else if (k == "vertices") {
                vertices = vec_list();
            } else if (k == "rays") {
                rays = vec_list();
            } else if (k == "halfspaces") {
                expect('[');
                int depth = 1;
                while (depth > 0 && pos < s.size()) {
                    const char ch = s[pos++];
                    if (ch == '[' || ch == '{') ++depth;
                    if (ch == ']' || ch == '}') --depth;
                }
            } else {
                throw InputError("front parse: unknown polytope key '" + k + "'");
            }
        }
        expect('}');
        if (dim < 1) throw InputError("front parse: polytope missing dim");
        if (vertices.empty()) return Polytope::empty(dim);
        return Polytope::from_vertices(vertices, rays);
    }
};

} // namespace

ParetoFront parse_front(const std::string& text) {
    Reader r(text);
    ParetoFront front;
    r.expect('{');
    bool first = true;
    while (!r.peek('}')) {
        if (!first) r.expect(',');
        first = false;
        const std::string k = r.key();
        if (k == "k") {
            front.k = r.integer().convert_to<int>();
        } else if (k == "regions") {
            r.expect('[');
            while (!r.peek(']')) {
                if (!front.regions.empty()) r.expect(',');
                ParetoRegion region;
                r.expect('{');
                bool rfirst = true;
                while (!r.peek('}')) {
                    if (!rfirst) r.expect(',');
                    rfirst = false;
                    const std::string rk = r.key();
                    if (rk == "piece_id") {
                        region.piece_id = r.integer().convert_to<int>();
                    } else if (rk == "slice") {
                        region.slice = r.slice();
                    } else if (rk == "base") {
                        region.base = r.polytope();
                    } else if (rk == "removals") {
                        r.expect('[');
                        while (!r.peek(']')) {
                            if (!region.removals.empty()) r.expect(',');
                            Removal rem;
                            r.expect('{');
                            bool mfirst = true;
                            while (!r.peek('}')) {
                                if (!mfirst) r.expect(',');
                                mfirst = false;
                                const std::string mk = r.key();
                                if (mk == "generator_piece_id") {
                                    rem.generator_piece_id = r.integer().convert_to<int>();
                                } else if (mk == "polytope") {
                                    rem.polytope = r.polytope();
                                } else if (mk == "generator") {
                                    rem.generator = r.polytope();
                                } else {
                                    throw InputError("front parse: unknown removal key '" + mk + "'");
                                }
                            }
                            r.expect('}');
                            region.removals.push_back(std::move(rem));
                        }
                        r.expect(']');
                    } else {
                        throw InputError("front parse: unknown region key '" + rk + "'");
                    }
                }
                r.expect('}');
                front.regions.push_back(std::move(region));
            }
            r.expect(']');
        } else {
            throw InputError("front parse: unknown key '" + k + "'");
        }
    }
    r.expect('}');
    return front;
}

void emit_plot_data(const ParetoFront& front, std::ostream& os) {
    if (front.k != 2 && front.k != 3) {
        throw UnsupportedDimensionError("plot output supports 2 or 3 objectives");
    }
    os << "region_id,kind";
    for (int c = 1; c <= front.k; ++c) os << ",y" << c;
    for (int c = 1; c <= front.k; ++c) os << ",y" << c << "_exact";
    os << '\n';
    auto emit_rows = [&](int region_id, const char* kind, const Polytope& poly) {
        for (const auto& v : poly.vertices) {
            os << region_id << ',' << kind;
            for (const auto& x : v) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", rational_to_double(x));
                os << ',' << buf;
            }
            for (const auto& x : v) os << ',' << rational_to_string(x);
            os << '\n';
        }
    };
    for (std::size_t i = 0; i < front.regions.size(); ++i) {
        emit_rows(static_cast<int>(i), "base", front.regions[i].base);
        for (const auto& rem : front.regions[i].removals) {
            emit_rows(static_cast<int>(i), "removal", rem.polytope);
        }
    }
}

} // namespace momilp
