#include "reebop/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace reebop::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError(path, msg);
}

const json& field(const json& j, const char* name, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) fail(path + "/" + name, "missing field");
    return *it;
}

const json* optional_field(const json& j, const char* name) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(name);
    return it == j.end() ? nullptr : &*it;
}

int small_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        fail(path, "integer out of range");
    return static_cast<int>(v);
}

const json& element(const json& j, std::size_t i) { return j[i]; }

std::string at(const std::string& path, std::size_t i) {
    return path + "/" + std::to_string(i);
}

}  // namespace

json load_json_file(const std::string& filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) fail(filename, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        fail(filename + ":" + std::to_string(line), e.what());
    }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            fail(path, "'" + s + "' is not an integer");
        }
    }
    fail(path, "expected an integer or a decimal string");
}

json to_json(const FGAbelianGroup& g) {
    json t = json::array();
    for (const TorsionFactor& f : g.torsion())
        t.push_back({{"p", to_json(f.prime)}, {"e", f.exponent}, {"m", f.multiplicity}});
    return {{"rank", g.rank()}, {"torsion", std::move(t)}};
}

FGAbelianGroup group_from_json(const json& j, const std::string& path) {
    const int rank = small_int(field(j, "rank", path), path + "/rank");
    const json& torsion = field(j, "torsion", path);
    if (!torsion.is_array()) fail(path + "/torsion", "expected an array");
    std::vector<TorsionFactor> factors;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        const std::string fp = at(path + "/torsion", i);
        const json& f = element(torsion, i);
        TorsionFactor tf;
        tf.prime = int_from_json(field(f, "p", fp), fp + "/p");
        tf.exponent = small_int(field(f, "e", fp), fp + "/e");
        tf.multiplicity = small_int(field(f, "m", fp), fp + "/m");
        factors.push_back(std::move(tf));
    }
    try {
        return FGAbelianGroup(rank, std::move(factors));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!element(j, 0).is_array()) fail(at(path, 0), "expected an array");
        cols = element(j, 0).size();
    }
    return matrix_from_json(j, rows, cols, path);
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    if (j.size() != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, got " +
                       std::to_string(j.size()));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = element(j, i);
        if (!row.is_array() || row.size() != cols)
            fail(at(path, i), "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = int_from_json(element(row, c), at(at(path, i), c));
    }
    return m;
}

json to_json(const ChainComplex& c) {
    json dims = json::array();
    for (int d : c.dims()) dims.push_back(d);
    json boundaries = json::array();
    for (int k = 1; k <= c.top_degree(); ++k) boundaries.push_back(to_json(c.boundary(k)));
    return {{"dims", std::move(dims)}, {"boundaries", std::move(boundaries)}};
}

ChainComplex complex_from_json(const json& j, const std::string& path) {
    const json& dims_j = field(j, "dims", path);
    if (!dims_j.is_array() || dims_j.empty())
        fail(path + "/dims", "expected a non-empty array");
    std::vector<int> dims;
    for (std::size_t i = 0; i < dims_j.size(); ++i) {
        int d = small_int(element(dims_j, i), at(path + "/dims", i));
        if (d < 0) fail(at(path + "/dims", i), "cell counts must be non-negative");
        dims.push_back(d);
    }
    const json& bnd = field(j, "boundaries", path);
    if (!bnd.is_array() || bnd.size() + 1 != dims.size())
        fail(path + "/boundaries",
             "expected " + std::to_string(dims.size() - 1) + " boundary matrices");
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 0; k < bnd.size(); ++k)
        boundaries.push_back(matrix_from_json(element(bnd, k),
                                              static_cast<std::size_t>(dims[k]),
                                              static_cast<std::size_t>(dims[k + 1]),
                                              at(path + "/boundaries", k)));
    try {
        return ChainComplex(std::move(dims), std::move(boundaries));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

json to_json(const ManifoldProfile& p) {
    json h = json::array();
    for (const FGAbelianGroup& g : p.homology) h.push_back(to_json(g));
    json out = {{"name", p.name}, {"dim", p.dim}, {"homology", std::move(h)}};
    if (p.embeds_in) out["embeds_in"] = *p.embeds_in;
    return out;
}

ManifoldProfile profile_from_json(const json& j, const std::string& path) {
    ManifoldProfile p;
    const json& name = field(j, "name", path);
    if (!name.is_string()) fail(path + "/name", "expected a string");
    p.name = name.get<std::string>();
    p.dim = small_int(field(j, "dim", path), path + "/dim");
    const json& h = field(j, "homology", path);
    if (!h.is_array()) fail(path + "/homology", "expected an array");
    for (std::size_t i = 0; i < h.size(); ++i)
        p.homology.push_back(group_from_json(element(h, i), at(path + "/homology", i)));
    if (const json* e = optional_field(j, "embeds_in"))
        p.embeds_in = small_int(*e, path + "/embeds_in");
    if (auto v = validate_profile(p))
        fail(path, "profile '" + p.name + "' is inconsistent (" + v->law + " at degree " +
                       std::to_string(v->degree) + ": " + v->detail + ")");
    return p;
}

std::vector<ManifoldProfile> catalog_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of profiles");
    std::vector<ManifoldProfile> cat;
    for (std::size_t i = 0; i < j.size(); ++i)
        cat.push_back(profile_from_json(element(j, i), at(path, i)));
    return cat;
}

json to_json(const Bouquet& b) {
    if (b.is_point()) return "point";
    json parts = json::array();
    for (const ManifoldProfile& p : b.parts) parts.push_back(to_json(p));
    return parts;
}

Bouquet bouquet_from_json(const json& j, const std::vector<ManifoldProfile>& catalog,
                          const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "point") return Bouquet::point();
        fail(path, "a bouquet is \"point\" or an array of parts");
    }
    if (!j.is_array()) fail(path, "a bouquet is \"point\" or an array of parts");
    if (j.empty()) fail(path, "empty bouquet; use \"point\"");
    Bouquet b;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& part = element(j, i);
        if (part.is_string()) {
            const std::string name = part.get<std::string>();
            auto p = find_profile(catalog, name);
            if (!p) fail(at(path, i), "unknown profile name '" + name + "'");
            b.parts.push_back(std::move(*p));
        } else {
            b.parts.push_back(profile_from_json(part, at(path, i)));
        }
    }
    return b;
}

OpKind kind_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected an op kind string");
    const std::string s = j.get<std::string>();
    if (s == "M") return OpKind::M;
    if (s == "S") return OpKind::S;
    if (s == "trivial-M") return OpKind::TrivialM;
    if (s == "trivial-S") return OpKind::TrivialS;
    fail(path, "unknown op kind '" + s + "' (M, S, trivial-M, trivial-S)");
}

json to_json(const ReebState& w) {
    json h = json::array();
    for (const FGAbelianGroup& g : w.homology) h.push_back(to_json(g));
    return {{"n", w.n}, {"homology", std::move(h)}};
}

ReebState state_from_json(const json& j, const std::string& path) {
    ReebState w;
    w.n = small_int(field(j, "n", path), path + "/n");
    if (w.n < 1) fail(path + "/n", "target dimension must be >= 1");
    const json& h = field(j, "homology", path);
    if (!h.is_array() || h.size() != static_cast<std::size_t>(w.n) + 1)
        fail(path + "/homology",
             "expected " + std::to_string(w.n + 1) + " groups (degrees 0.." +
                 std::to_string(w.n) + ")");
    for (std::size_t i = 0; i < h.size(); ++i)
        w.homology.push_back(group_from_json(element(h, i), at(path + "/homology", i)));
    return w;
}

json to_json(const TargetFamily& t) {
    json g = json::array();
    for (const FGAbelianGroup& x : t.groups) g.push_back(to_json(x));
    return {{"n", t.n}, {"groups", std::move(g)}};
}

TargetFamily target_from_json(const json& j, const std::string& path) {
    TargetFamily t;
    t.n = small_int(field(j, "n", path), path + "/n");
    if (t.n < 1) fail(path + "/n", "target dimension must be >= 1");
    const json& g = field(j, "groups", path);
    if (!g.is_array() || g.size() != static_cast<std::size_t>(t.n) + 1)
        fail(path + "/groups",
             "expected " + std::to_string(t.n + 1) + " groups (degrees 0.." +
                 std::to_string(t.n) + ")");
    for (std::size_t i = 0; i < g.size(); ++i)
        t.groups.push_back(group_from_json(element(g, i), at(path + "/groups", i)));
    return t;
}

json to_json(const Plan& p) {
    json ops = json::array();
    for (const BubblingOp& op : p.ops)
        ops.push_back({{"kind", to_string(op.kind)}, {"bouquet", to_json(op.polyhedron)}});
    json initial = p.initial == initial_disc_state(p.n) ? json("disc") : to_json(p.initial);
    return {{"n", p.n}, {"initial", std::move(initial)}, {"ops", std::move(ops)}};
}

Plan plan_from_json(const json& j, const std::vector<ManifoldProfile>& catalog,
                    const std::string& path) {
    Plan p;
    p.n = small_int(field(j, "n", path), path + "/n");
    if (p.n < 1) fail(path + "/n", "target dimension must be >= 1");
    const json& initial = field(j, "initial", path);
    if (initial.is_string() && initial.get<std::string>() == "disc") {
        p.initial = initial_disc_state(p.n);
    } else {
        p.initial = state_from_json(initial, path + "/initial");
        if (p.initial.n != p.n)
            fail(path + "/initial/n", "initial state dimension differs from the plan's");
    }
    const json& ops = field(j, "ops", path);
    if (!ops.is_array()) fail(path + "/ops", "expected an array of ops");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const json& op = element(ops, i);
        const std::string op_path = at(path + "/ops", i);
        BubblingOp out;
        out.kind = kind_from_json(field(op, "kind", op_path), op_path + "/kind");
        out.polyhedron =
            bouquet_from_json(field(op, "bouquet", op_path), catalog, op_path + "/bouquet");
        p.ops.push_back(std::move(out));
    }
    return p;
}

json to_json(const Verdict& v) {
    return {{"status", to_string(v.status)}, {"rule", v.rule}, {"witness", v.witness}};
}

json to_json(const OpLedgerEntry& e) {
    json delta = json::array();
    for (const FGAbelianGroup& g : e.delta) delta.push_back(to_json(g));
    return {{"op", e.op_index}, {"delta", std::move(delta)}};
}

json to_json(const SourceHomologyReport& r) {
    json h = json::array();
    for (const FGAbelianGroup& g : r.homology) h.push_back(to_json(g));
    return {{"source_dim", r.source_dim},
            {"max_degree", r.max_degree},
            {"inclusive", r.inclusive},
            {"homology", std::move(h)},
            {"hypotheses", r.hypotheses}};
}

PrimePowerPartition partition_from_json(const json& j, const std::string& path) {
    PrimePowerPartition p;
    const json& classes = field(j, "classes", path);
    if (!classes.is_array()) fail(path + "/classes", "expected an array of classes");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const json& cls = element(classes, i);
        if (!cls.is_array()) fail(at(path + "/classes", i), "expected an array");
        std::vector<Int> entries;
        for (std::size_t k = 0; k < cls.size(); ++k)
            entries.push_back(
                int_from_json(element(cls, k), at(at(path + "/classes", i), k)));
        p.classes.push_back(std::move(entries));
    }
    return p;
}

SubgroupFamily family_from_json(const json& j, const std::string& path) {
    SubgroupFamily f;
    const json& entries = field(j, "entries", path);
    if (!entries.is_array()) fail(path + "/entries", "expected an array of entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = element(entries, i);
        const std::string ep = at(path + "/entries", i);
        SubgroupHypothesis h;
        h.subgroup = group_from_json(field(e, "group", ep), ep + "/group");
        const json& degrees = field(e, "degrees", ep);
        if (!degrees.is_array()) fail(ep + "/degrees", "expected an array of degrees");
        for (std::size_t k = 0; k < degrees.size(); ++k)
            h.degrees.push_back(small_int(element(degrees, k), at(ep + "/degrees", k)));
        f.entries.push_back(std::move(h));
    }
    return f;
}

}  // namespace reebop::io
