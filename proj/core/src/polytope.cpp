#include "momilp/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "momilp/errors.hpp"

namespace momilp {

HalfSpace HalfSpace::canonical() const {
    HalfSpace h = *this;
    for (const auto& x : h.normal) {
        if (x != 0) {
            const Rational s = abs(x);
            for (auto& y : h.normal) y /= s;
            h.offset /= s;
            return h;
        }
    }
    throw InputError("halfspace with zero normal");
}

HalfSpace HalfSpace::complement() const {
    HalfSpace h;
    h.normal.reserve(normal.size());
    for (const auto& x : normal) h.normal.push_back(-x);
    h.offset = -offset;
    return h;
}

bool HalfSpace::operator<(const HalfSpace& other) const {
    const int c = lex_compare(normal, other.normal);
    if (c != 0) return c < 0;
    return offset < other.offset;
}

namespace {

// Visit every size-k index subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_combination(int m, int k, F&& visit) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct ConeGenerators {
    Matrix lineality; // canonical kernel basis of the full row system
    Matrix rays;      // extreme rays modulo lineality, canonical and sorted
};

// Generators of the polyhedral cone {x in Q^d : rows * x <= 0}.
// An extreme ray (mod lineality) has an active set of rank d - lin - 1, so it
// appears as the kernel line of some row subset of exactly that rank.
ConeGenerators cone_generators(const Matrix& rows, int d) {
    ConeGenerators out;
    out.lineality = kernel_basis(rows, d);
    const int lin = static_cast<int>(out.lineality.size());
    const int target = d - lin - 1;
    if (target < 0) return out;

    const int m = static_cast<int>(rows.size());
    std::vector<Vec> found;
    for_each_combination(m, target, [&](const std::vector<int>& idx) {
        Matrix sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(rows[i]);
        Matrix k = kernel_basis(sub, d);
        if (static_cast<int>(k.size()) != lin + 1) return; // rank-deficient subset
        Vec r;
        for (const auto& kv : k) {
            Vec proj = project_out(kv, out.lineality);
            if (!is_zero_vec(proj)) {
                r = scale_first_nonzero_to_unit(std::move(proj));
                break;
            }
        }
        if (r.empty()) return;
        auto in_cone = [&](const Vec& v) {
            for (const auto& row : rows) {
                if (dot(row, v) > 0) return false;
            }
            return true;
        };
        if (in_cone(r)) {
            found.push_back(std::move(r));
        } else {
            for (auto& x : r) x = -x;
            if (in_cone(r)) found.push_back(std::move(r));
        }
    });
    std::sort(found.begin(), found.end(), [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.rays = std::move(found);
    return out;
}

struct RawHrep {
    std::vector<HalfSpace> halfspaces;
    int affine_dim = -1;
};

// Facets of conv(verts) + cone(rays) via the cone of valid inequalities:
// w = (a, -beta) is valid iff (v,1).w <= 0 for every vertex and (r,0).w <= 0
// for every ray. Extreme rays of that cone are the facets; its lineality is
// the affine hull, emitted as opposing halfspace pairs.
RawHrep raw_hrep_from_generators(const std::vector<Vec>& verts, const std::vector<Vec>& rays, int d) {
    Matrix g;
    g.reserve(verts.size() + rays.size());
    for (const auto& v : verts) {
        Vec row = v;
        row.push_back(1);
        g.push_back(std::move(row));
    }
    for (const auto& r : rays) {
        Vec row = r;
        row.push_back(0);
        g.push_back(std::move(row));
    }
    const ConeGenerators dual = cone_generators(g, d + 1);

    RawHrep out;
    out.affine_dim = d - static_cast<int>(dual.lineality.size());
    std::vector<HalfSpace> hs;
    auto to_halfspace = [&](const Vec& w) {
        Vec normal(w.begin(), w.end() - 1);
        if (is_zero_vec(normal)) return; // the trivially valid 0.x <= const
        hs.push_back(HalfSpace(std::move(normal), -w[d]).canonical());
    };
    for (const auto& w : dual.rays) to_halfspace(w);
    for (const auto& l : dual.lineality) {
        to_halfspace(l);
        Vec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        to_halfspace(neg);
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    out.halfspaces = std::move(hs);
    return out;
}

struct RawGenerators {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};

// Extreme points / rays of {x : normal.x <= offset for each row} by
// enumerating the homogenisation {(x,t) : normal.x - offset t <= 0, t >= 0}.
RawGenerators raw_generators_from_rows(const std::vector<HalfSpace>& rows, int d) {
    Matrix homog;
    homog.reserve(rows.size() + 1);
    for (const auto& h : rows) {
        Vec r = h.normal;
        r.push_back(-h.offset);
        homog.push_back(std::move(r));
    }
    Vec t_row(d + 1, 0);
    t_row[d] = -1;
    homog.push_back(std::move(t_row));

    const ConeGenerators gen = cone_generators(homog, d + 1);
    if (!gen.lineality.empty()) {
        throw PipelineError("polyhedron contains a line; not representable by vertices and rays");
    }
    RawGenerators out;
    for (const auto& w : gen.rays) {
        const Rational& t = w[d];
        if (t > 0) {
            Vec v(d);
            for (int i = 0; i < d; ++i) v[i] = w[i] / t;
            out.vertices.push_back(std::move(v));
        } else {
            Vec r(w.begin(), w.end() - 1);
            if (!is_zero_vec(r)) out.rays.push_back(scale_first_nonzero_to_unit(std::move(r)));
        }
    }
    auto lex_less = [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; };
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

std::vector<HalfSpace> canonicalize_rows(const std::vector<HalfSpace>& rows, int d, bool& infeasible) {
    infeasible = false;
    std::vector<HalfSpace> out;
    out.reserve(rows.size());
    for (const auto& h : rows) {
        if (static_cast<int>(h.normal.size()) != d) {
            throw InputError("halfspace dimension mismatch");
        }
        if (is_zero_vec(h.normal)) {
            if (h.offset < 0) infeasible = true; // 0 <= negative
            continue;
        }
        out.push_back(h.canonical());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

Polytope Polytope::empty(int ambient_dim) {
    Polytope p;
    p.dim = ambient_dim;
    p.affine_dim = -1;
    return p;
}

Polytope Polytope::from_vertices(const std::vector<Vec>& verts, const std::vector<Vec>& ray_dirs) {
    if (verts.empty()) throw InputError("from_vertices: vertex list is empty");
    const int d = static_cast<int>(verts[0].size());
    if (d < 1) throw InputError("from_vertices: ambient dimension must be >= 1");
    for (const auto& v : verts) {
        if (static_cast<int>(v.size()) != d) throw InputError("from_vertices: dimension mismatch");
    }
    std::vector<Vec> rays;
    for (const auto& r : ray_dirs) {
        if (static_cast<int>(r.size()) != d) throw InputError("from_vertices: ray dimension mismatch");
        if (!is_zero_vec(r)) rays.push_back(r);
    }
    RawHrep hr = raw_hrep_from_generators(verts, rays, d);
    RawGenerators gen = raw_generators_from_rows(hr.halfspaces, d);

    Polytope p;
    p.dim = d;
    p.affine_dim = hr.affine_dim;
    p.vertices = std::move(gen.vertices);
    p.rays = std::move(gen.rays);
    p.halfspaces = std::move(hr.halfspaces);
    return p;
}

Polytope Polytope::from_halfspaces(const std::vector<HalfSpace>& halfspaces, int ambient_dim) {
    if (ambient_dim < 1) throw InputError("from_halfspaces: ambient dimension must be >= 1");
    bool infeasible = false;
    const auto rows = canonicalize_rows(halfspaces, ambient_dim, infeasible);
    if (infeasible) return empty(ambient_dim);

    RawGenerators gen = raw_generators_from_rows(rows, ambient_dim);
    if (gen.vertices.empty()) return empty(ambient_dim);

    RawHrep hr = raw_hrep_from_generators(gen.vertices, gen.rays, ambient_dim);
    Polytope p;
    p.dim = ambient_dim;
    p.affine_dim = hr.affine_dim;
    p.vertices = std::move(gen.vertices);
    p.rays = std::move(gen.rays);
    p.halfspaces = std::move(hr.halfspaces);
    return p;
}

bool Polytope::contains(const Vec& point) const {
    if (static_cast<int>(point.size()) != dim) throw InputError("contains: dimension mismatch");
    if (is_empty()) return false;
    for (const auto& h : halfspaces) {
        if (!h.satisfied_by(point)) return false;
    }
    return true;
}

bool Polytope::subset_of(const Polytope& other) const {
    if (dim != other.dim) throw InputError("subset_of: dimension mismatch");
    if (is_empty()) return true;
    if (other.is_empty()) return false;
    for (const auto& v : vertices) {
        if (!other.contains(v)) return false;
    }
    for (const auto& r : rays) {
        for (const auto& h : other.halfspaces) {
            if (dot(h.normal, r) > 0) return false;
        }
    }
    return true;
}

bool Polytope::operator==(const Polytope& other) const {
    return dim == other.dim && affine_dim == other.affine_dim && vertices == other.vertices &&
           rays == other.rays;
}

namespace {

void emit_rational(std::ostream& os, const Rational& r) {
    os << '[' << numerator(r).str() << ',' << denominator(r).str() << ']';
}

void emit_vec(std::ostream& os, const Vec& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        emit_rational(os, v[i]);
    }
    os << ']';
}

// Minimal cursor parser for the polytope text form. Only the grammar this
// library emits is accepted; integers are arbitrary precision.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    explicit Cursor(const std::string& text) : s(text) {}

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
            throw InputError(std::string("polytope parse: expected '") + c + "'");
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
    BigInt integer() {
        skip_ws();
        std::string digits;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') digits += s[pos++];
        if (digits.empty() || digits == "-" || digits == "+") {
            throw InputError("polytope parse: expected integer");
        }
        return BigInt(digits);
    }
    Rational rational() {
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
            v.push_back(rational());
            while (peek(',')) {
                expect(',');
                v.push_back(rational());
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
};

} // namespace

std::string Polytope::to_json() const {
    std::ostringstream os;
    os << "{\"dim\":" << dim << ",\"vertices\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        emit_vec(os, vertices[i]);
    }
    os << "],\"rays\":[";
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i) os << ',';
        emit_vec(os, rays[i]);
    }
    os << "],\"halfspaces\":[";
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        if (i) os << ',';
        os << "{\"normal\":";
        emit_vec(os, halfspaces[i].normal);
        os << ",\"offset\":";
        emit_rational(os, halfspaces[i].offset);
        os << '}';
    }
    os << "]}";
    return os.str();
}

Polytope Polytope::parse_json(const std::string& text) {
    Cursor c(text);
    c.expect('{');
    int dim = -1;
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
    bool first = true;
    while (!c.peek('}')) {
        if (!first) c.expect(',');
        first = false;
        const std::string k = c.key();
        if (k == "dim") {
            dim = c.integer().convert_to<int>();
        } else if (k == "vertices") {
            vertices = c.vec_list();
        } else if (k == "rays") {
            rays = c.vec_list();
        } else if (k == "halfspaces") {
            // Derived data; skip to the matching close bracket.
            c.expect('[');
            int depth = 1;
            while (depth > 0 && c.pos < c.s.size()) {
                const char ch = c.s[c.pos++];
                if (ch == '[' || ch == '{') ++depth;
                if (ch == ']' || ch == '}') --depth;
            }
        } else {
            throw InputError("polytope parse: unknown key '" + k + "'");
        }
    }
    c.expect('}');
    if (dim < 1) throw InputError("polytope parse: missing dim");
    if (vertices.empty()) return Polytope::empty(dim);
    return Polytope::from_vertices(vertices, rays);
}

} // namespace momilp
