#include "apn/vbf.hpp"

#include "apn/parallel.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apn {

TruthTable evaluate(const BivariatePair& p) {
    const Field& base = p.field.base();
    unsigned m = base.degree();
    if (p.field.degree() < 2) throw std::invalid_argument("n < 2 is not supported");
    TruthTable tt;
    tt.n = p.field.degree();
    tt.values.assign(std::size_t{1} << tt.n, 0);
    for (Elt y = 0; y < base.order(); ++y) {
        for (Elt x = 0; x < base.order(); ++x) {
            Elt fv = 0, gv = 0;
            for (const Term& t : p.f)
                fv ^= base.mul(t.c, base.mul(base.pow(x, t.xe), base.pow(y, t.ye)));
            for (const Term& t : p.g)
                gv ^= base.mul(t.c, base.mul(base.pow(x, t.xe), base.pow(y, t.ye)));
            tt.values[(std::size_t(y) << m) | x] = std::uint16_t((gv << m) | fv);
        }
    }
    return tt;
}

TruthTable univariate_evaluate(const Field& fn, const std::vector<UniTerm>& terms) {
    if (fn.degree() < 2) throw std::invalid_argument("n < 2 is not supported");
    TruthTable tt;
    tt.n = fn.degree();
    tt.values.assign(fn.order(), 0);
    for (Elt x = 0; x < fn.order(); ++x) {
        Elt v = 0;
        for (const UniTerm& t : terms) v ^= fn.mul(t.c, fn.pow(x, t.e));
        tt.values[x] = std::uint16_t(v);
    }
    return tt;
}

DdtSummary differential_uniformity(const TruthTable& tt, unsigned threads) {
    const std::size_t size = tt.values.size();
    struct Partial {
        unsigned delta = 0;
        std::vector<std::pair<std::uint16_t, std::uint16_t>> pairs;
    };
    unsigned nthreads = resolve_threads(threads);
    std::vector<Partial> parts(nthreads >= 1 ? nthreads : 1);
    if (size > 1) {
        parallel_chunks(size - 1, threads, [&](unsigned chunk, std::size_t b0, std::size_t b1) {
            Partial& part = parts[chunk];
            std::vector<std::uint32_t> hist(size);
            for (std::size_t ai = b0; ai < b1; ++ai) {
                std::uint16_t a = std::uint16_t(ai + 1); // a != 0
                std::fill(hist.begin(), hist.end(), 0);
                for (std::size_t x = 0; x < size; ++x)
                    ++hist[tt.values[x ^ a] ^ tt.values[x]];
                for (std::size_t b = 0; b < size; ++b) {
                    if (hist[b] > part.delta) {
                        part.delta = hist[b];
                        part.pairs.clear();
                    }
                    if (hist[b] == part.delta && part.pairs.size() < 16)
                        part.pairs.emplace_back(a, std::uint16_t(b));
                }
            }
        });
    }
    DdtSummary out;
    for (const Partial& p : parts) { // chunks are in ascending a-order
        if (p.delta > out.delta) {
            out.delta = p.delta;
            out.worst_pairs.clear();
        }
        if (p.delta == out.delta)
            for (auto& pr : p.pairs)
                if (out.worst_pairs.size() < 16) out.worst_pairs.push_back(pr);
    }
    return out;
}

bool is_apn(const TruthTable& tt) {
    const std::size_t size = tt.values.size();
    std::vector<std::uint8_t> hist(size);
    for (std::size_t a = 1; a < size; ++a) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::size_t x = 0; x < size; ++x) {
            if (++hist[tt.values[x ^ a] ^ tt.values[x]] > 2) return false;
        }
    }
    return true;
}

std::map<std::size_t, std::size_t> preimage_profile(const TruthTable& tt) {
    std::vector<std::size_t> count(tt.values.size(), 0);
    for (std::uint16_t v : tt.values) ++count[v];
    std::map<std::size_t, std::size_t> profile;
    for (std::size_t c : count)
        if (c) ++profile[c];
    return profile;
}

TruthTable add_pointwise(const TruthTable& a, const TruthTable& b) {
    if (a.n != b.n) throw std::invalid_argument("size mismatch in add_pointwise");
    TruthTable out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] ^= b.values[i];
    return out;
}

TruthTable compose_linear(const TruthTable& tt, const std::vector<std::uint16_t>& map) {
    if (map.size() != tt.values.size()) throw std::invalid_argument("size mismatch in compose_linear");
    TruthTable out;
    out.n = tt.n;
    out.values.resize(tt.values.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.values[i] = tt.values[map[i]];
    return out;
}

std::uint64_t fnv1a_hash(const TruthTable& tt) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint16_t v : tt.values) {
        h = (h ^ (v & 0xff)) * 0x100000001b3ull;
        h = (h ^ (v >> 8)) * 0x100000001b3ull;
    }
    return h;
}

void save_table(const TruthTable& tt, const std::string& path, const std::string& source) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    std::ostringstream hash;
    hash << "0x" << std::hex << fnv1a_hash(tt);
    nlohmann::json header = {{"n", tt.n}, {"source", source}, {"hash", hash.str()}};
    os << header.dump() << '\n';
    for (std::uint16_t v : tt.values) {
        char le[2] = {char(v & 0xff), char(v >> 8)};
        os.write(le, 2);
    }
}

TruthTable load_table(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("missing table header");
    nlohmann::json header = nlohmann::json::parse(line); // throws on malformed input
    TruthTable tt;
    tt.n = header.at("n").get<unsigned>();
    if (tt.n < 2 || tt.n > 16) throw std::runtime_error("table dimension out of range");
    tt.values.resize(std::size_t{1} << tt.n);
    for (auto& v : tt.values) {
        char le[2];
        if (!is.read(le, 2)) throw std::runtime_error("truncated table file");
        v = std::uint16_t(std::uint8_t(le[0]) | (std::uint16_t(std::uint8_t(le[1])) << 8));
    }
    std::ostringstream hash;
    hash << "0x" << std::hex << fnv1a_hash(tt);
    if (header.contains("hash") && header["hash"].get<std::string>() != hash.str())
        throw std::runtime_error("table hash mismatch");
    return tt;
}

} // namespace apn
