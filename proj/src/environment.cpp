#include "rcm/environment.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "rcm/errors.hpp"

namespace rcm {

ConductanceField::ConductanceField(BoxGeometry geometry, std::vector<double> values,
                                   Provenance provenance)
    : geom_(geometry), values_(std::move(values)), prov_(std::move(provenance)) {
    if (static_cast<std::int64_t>(values_.size()) != geom_.edge_count())
        throw std::invalid_argument("ConductanceField: value count != edge count");
    for (double v : values_)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("ConductanceField: value outside [0,1]");
}

double ConductanceField::conductance(VertexIndex v, int dir) const {
    int axis = dir >> 1;
    if ((dir & 1) == 0) {
        EdgeIndex e = geom_.edge_index(v, axis);
        return e < 0 ? 0.0 : values_[static_cast<std::size_t>(e)];
    }
    VertexIndex w = geom_.neighbor(v, axis, -1);
    if (w < 0) return 0.0;
    return values_[static_cast<std::size_t>(geom_.edge_index(w, axis))];
}

double ConductanceField::vertex_weight(VertexIndex v) const {
    double pi = 0.0;
    for (int dir = 0; dir < 2 * geom_.dim(); ++dir) pi += conductance(v, dir);
    return pi;
}

ConductanceField ConductanceField::with_edge(EdgeIndex e, double value) const {
    std::vector<double> v = values_;
    v.at(static_cast<std::size_t>(e)) = value;
    return ConductanceField(geom_, std::move(v), prov_);
}

ConductanceField sample_field(const LawSpec& law, int d, int L, std::uint64_t seed) {
    if (L < 1) throw std::invalid_argument("sample_field: L must be >= 1");
    BoxGeometry g(d, L);
    std::vector<double> vals(static_cast<std::size_t>(g.edge_count()));
    g.for_each_edge([&](EdgeIndex e, VertexIndex, VertexIndex, int) {
        CounterStream s(seed, StreamPurpose::kFieldEdge, static_cast<std::uint64_t>(e));
        vals[static_cast<std::size_t>(e)] = law.sample(s);
    });
    return ConductanceField(g, std::move(vals), Provenance{law, seed});
}

namespace {

// Little-endian primitives; the file format is byte-exact by definition.
void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f64(std::string& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

struct Reader {
    const unsigned char* p;
    const unsigned char* end;
    void need(std::size_t n) const {
        if (static_cast<std::size_t>(end - p) < n)
            throw IoError("environment file truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
        p += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        p += 8;
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
};

constexpr char kMagic[4] = {'R', 'C', 'M', '1'};
constexpr std::uint32_t kVersion = 1;

} // namespace

void write_environment(const ConductanceField& field, const std::filesystem::path& path) {
    std::string buf;
    buf.append(kMagic, 4);
    put_u32(buf, kVersion);
    put_u32(buf, static_cast<std::uint32_t>(field.geometry().dim()));
    put_u32(buf, static_cast<std::uint32_t>(field.geometry().radius()));
    put_u32(buf, field.provenance().law.tag());
    auto params = field.provenance().law.flat_params();
    put_u32(buf, static_cast<std::uint32_t>(params.size()));
    for (double p : params) put_f64(buf, p);
    put_u64(buf, field.provenance().seed);
    for (double v : field.values()) put_f64(buf, v);

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for write: " + path.string());
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!os) throw IoError("write failed: " + path.string());
}

ConductanceField read_environment(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    Reader r{reinterpret_cast<const unsigned char*>(buf.data()),
             reinterpret_cast<const unsigned char*>(buf.data()) + buf.size()};

    r.need(4);
    if (std::memcmp(r.p, kMagic, 4) != 0)
        throw IoError("bad magic in " + path.string());
    r.p += 4;
    std::uint32_t version = r.u32();
    if (version != kVersion)
        throw IoError("unsupported environment file version " + std::to_string(version));
    int d = static_cast<int>(r.u32());
    int L = static_cast<int>(r.u32());
    std::uint32_t tag = r.u32();
    std::uint32_t n_params = r.u32();
    std::vector<double> params(n_params);
    for (auto& p : params) p = r.f64();
    std::uint64_t seed = r.u64();

    BoxGeometry g(d, L);
    std::vector<double> vals(static_cast<std::size_t>(g.edge_count()));
    for (auto& v : vals) v = r.f64();
    if (r.p != r.end) throw IoError("trailing bytes in " + path.string());
    return ConductanceField(g, std::move(vals),
                            Provenance{LawSpec::from_tag_params(tag, params), seed});
}

namespace {

// The 4d-2 edges incident to y or z other than {y,z} itself. Returns false if
// any of them leaves the box.
bool collect_weak_edges(const BoxGeometry& g, VertexIndex y, VertexIndex z,
                        std::vector<WeakEdge>& out) {
    out.clear();
    for (VertexIndex endpoint : {y, z}) {
        for (const auto& ie : incident_edges(g, endpoint)) {
            if (ie.external) return false;
            if (ie.other == (endpoint == y ? z : y)) continue; // the strong edge
            out.push_back(WeakEdge{ie.edge, endpoint, ie.other, 0.0});
        }
    }
    return true;
}

} // namespace

std::pair<ConductanceField, TrapRecord>
plant_trap(const ConductanceField& field, VertexIndex y, VertexIndex z, int n,
           double c_strong, CounterStream& rng) {
    const BoxGeometry& g = field.geometry();
    if (n < 4 * g.dim())
        throw std::invalid_argument("plant_trap: trap scale n must be >= 4d");
    EdgeIndex strong = g.edge_between(y, z);
    if (strong < 0)
        throw std::invalid_argument("plant_trap: endpoints are not neighbors in the box");

    std::vector<WeakEdge> weak;
    if (!collect_weak_edges(g, y, z, weak))
        throw std::invalid_argument(
            "plant_trap: edge too close to the box boundary (incident edges leave the box)");

    std::vector<double> vals(field.values().begin(), field.values().end());
    TrapRecord rec;
    rec.strong_edge = strong;
    rec.y = std::min(y, z);
    rec.z = std::max(y, z);
    rec.n_scale = n;
    rec.strong_value = std::max(vals[static_cast<std::size_t>(strong)], c_strong);
    vals[static_cast<std::size_t>(strong)] = rec.strong_value;
    for (auto& w : weak) {
        w.value = (1.0 + rng.next_unit()) / n;
        vals[static_cast<std::size_t>(w.edge)] = w.value;
    }
    rec.weak_edges = std::move(weak);
    return {ConductanceField(g, std::move(vals), field.provenance()), rec};
}

std::vector<TrapRecord> detect_traps(const ConductanceField& field, int n,
                                     double c_strong) {
    const BoxGeometry& g = field.geometry();
    const double lo = 1.0 / n, hi = 2.0 / n;
    std::vector<TrapRecord> traps;
    std::vector<WeakEdge> weak;
    g.for_each_edge([&](EdgeIndex e, VertexIndex y, VertexIndex z, int) {
        if (field.value(e) < c_strong) return;
        if (!collect_weak_edges(g, y, z, weak)) return; // needs interior endpoints
        for (auto& w : weak) {
            w.value = field.value(w.edge);
            if (w.value < lo || w.value > hi) return;
        }
        TrapRecord rec;
        rec.strong_edge = e;
        rec.y = y;
        rec.z = z;
        rec.strong_value = field.value(e);
        rec.weak_edges = weak;
        rec.n_scale = n;
        traps.push_back(std::move(rec));
    });
    return traps;
}

TrapAdjacency::TrapAdjacency(const BoxGeometry& g, const std::vector<TrapRecord>& traps) {
    for (const auto& t : traps) {
        int trap_norm = std::min(g.linf(t.y), g.linf(t.z));
        for (VertexIndex endpoint : {t.y, t.z}) {
            for (int dir = 0; dir < 2 * g.dim(); ++dir) {
                VertexIndex x = g.neighbor(endpoint, dir);
                if (x < 0 || x == t.y || x == t.z) continue;
                if (trap_norm > g.linf(x)) qualifying_.insert(x);
            }
        }
    }
}

bool is_trap_adjacent(const ConductanceField& field, VertexIndex x, int n,
                      double c_strong) {
    TrapAdjacency adj(field.geometry(), detect_traps(field, n, c_strong));
    return adj.at(x);
}

} // namespace rcm
