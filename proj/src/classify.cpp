#include "kakeya/classify.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "kakeya/bits.hpp"
#include "kakeya/json_io.hpp"

namespace kakeya {

int classification_threshold(unsigned q) {
    return q % 2 ? int((3 * (q * q - 1)) / 4 + q) : int((3 * q * q) / 4 + q - 1);
}

std::map<int, std::uint64_t> ClassificationReport::size_histogram() const {
    std::map<int, std::uint64_t> h;
    for (const auto& [key, count] : census) h[key.size] += count;
    return h;
}

int ClassificationReport::min_size() const {
    int m = -1;
    for (const auto& [key, count] : census)
        if (count && (m < 0 || key.size < m)) m = key.size;
    return m;
}

namespace {

struct QuadData {
    LineBits onmask;
    LineBits side_r;
    std::vector<std::int16_t> sec_second; // affine index, -1 tangent, -2 on quadric
};

/// Precomputed search tables for one field: indexed candidate lines with
/// affine coverage bitsets, the pairwise meet relation, every hyperbolic
/// quadric of the pencil through the standard conic with its generator and
/// secant data, and the unique quadric through each disjoint line pair.
struct Tables {
    Field field;
    Geometry geom;
    Conic conic;
    int q = 0, n = 0, per_point = 0, ncand = 0;
    std::vector<ProjLine> cand;
    std::vector<PointBits> cover;
    std::vector<LineBits> meets;
    std::vector<QuadData> quads;
    std::vector<std::int16_t> pair_quad;
    std::vector<int> future_min;
    std::vector<std::uint32_t> canon_memo;

    Tables(unsigned p, unsigned deg);
    Tables(const Tables&) = delete;
};

Tables::Tables(unsigned p, unsigned deg)
    : field(p, deg), geom(field), conic(standard_conic(field)) {
    q = int(field.q());
    n = q + 1;
    per_point = q * q;
    ncand = n * per_point;

    cand.resize(std::size_t(ncand));
    cover.resize(std::size_t(ncand));
    for (int i = 0; i < n; ++i) {
        int cp = geom.point_index(conic.points[std::size_t(i)]);
        int slot = 0;
        for (int li : geom.lines_through_point()[std::size_t(cp)]) {
            const ProjLine& l = geom.lines()[std::size_t(li)];
            if (line_at_infinity(l)) continue;
            int id = i * per_point + slot++;
            cand[std::size_t(id)] = l;
            PointBits pb{};
            for (int pi : geom.line_points()[std::size_t(li)]) {
                const ProjPoint& pt = geom.points()[std::size_t(pi)];
                if (!is_infinite(pt)) pb.set(std::size_t(affine_index(field, pt)));
            }
            cover[std::size_t(id)] = pb;
        }
        if (slot != per_point)
            throw StructureError("conic point does not carry q^2 affine lines");
    }

    meets.resize(std::size_t(ncand));
    for (int a = 0; a < ncand; ++a)
        for (int b = a + 1; b < ncand; ++b) {
            // Same direction: the lines share their point at infinity.
            // Different directions: they meet iff they share an affine
            // point, i.e. their coverage bitsets intersect.
            bool touching = a / per_point == b / per_point ||
                            cover[std::size_t(a)].intersects(cover[std::size_t(b)]);
            if (touching) {
                meets[std::size_t(a)].set(std::size_t(b));
                meets[std::size_t(b)].set(std::size_t(a));
            }
        }

    // Every hyperbolic quadric meeting the infinite plane exactly in the
    // conic: lift(C) + X3 (a0 X0 + a1 X1 + a2 X2 + a3 X3).
    QuadraticForm base = lift_planar_form(conic.form);
    const int i03 = QuadraticForm::index(4, 0, 3), i13 = QuadraticForm::index(4, 1, 3),
              i23 = QuadraticForm::index(4, 2, 3), i33 = QuadraticForm::index(4, 3, 3);
    unsigned uq = unsigned(q);
    for (unsigned a0 = 0; a0 < uq; ++a0)
        for (unsigned a1 = 0; a1 < uq; ++a1)
            for (unsigned a2 = 0; a2 < uq; ++a2)
                for (unsigned a3 = 0; a3 < uq; ++a3) {
                    QuadraticForm form = base;
                    form.coef[std::size_t(i03)] = Fel(a0);
                    form.coef[std::size_t(i13)] = Fel(a1);
                    form.coef[std::size_t(i23)] = Fel(a2);
                    form.coef[std::size_t(i33)] = Fel(a3);
                    PointBits zeros{};
                    int zc = 0;
                    ProjPoint pt;
                    pt.v[3] = 1;
                    for (int z = 0; z < q; ++z)
                        for (int y = 0; y < q; ++y)
                            for (int x = 0; x < q; ++x) {
                                pt.v[0] = Fel(x);
                                pt.v[1] = Fel(y);
                                pt.v[2] = Fel(z);
                                if (form.eval(field, pt) == 0) {
                                    zeros.set(std::size_t(x + y * q + z * q * q));
                                    ++zc;
                                }
                            }
                    if (zc != q * q + q) continue; // (q+1)^2 points minus the conic
                    QuadData qd;
                    int oncount = 0;
                    for (int c = 0; c < ncand; ++c)
                        if (zeros.contains(cover[std::size_t(c)])) {
                            qd.onmask.set(std::size_t(c));
                            ++oncount;
                        }
                    if (oncount != 2 * n) continue;
                    int first = qd.onmask.lowest();
                    int side_count = 0;
                    for (int c = 0; c < ncand; ++c) {
                        if (!qd.onmask.test(std::size_t(c))) continue;
                        if (c == first || !meets[std::size_t(first)].test(std::size_t(c))) {
                            qd.side_r.set(std::size_t(c));
                            ++side_count;
                        }
                    }
                    if (side_count != n)
                        throw StructureError("pencil quadric reguli are unbalanced");
                    qd.sec_second.assign(std::size_t(ncand), -1);
                    for (int c = 0; c < ncand; ++c) {
                        if (qd.onmask.test(std::size_t(c))) {
                            qd.sec_second[std::size_t(c)] = -2;
                            continue;
                        }
                        PointBits inter = cover[std::size_t(c)] & zeros;
                        int pc = inter.count();
                        if (pc > 1)
                            throw StructureError("line off the quadric with two affine hits");
                        qd.sec_second[std::size_t(c)] = pc == 0 ? std::int16_t(-1)
                                                                : std::int16_t(inter.lowest());
                    }
                    quads.push_back(std::move(qd));
                }

    // Quadric through each candidate pair with distinct directions: unique
    // for disjoint pairs; for meeting pairs only a unique hit is recorded.
    pair_quad.assign(std::size_t(ncand) * std::size_t(ncand), -1);
    for (int a = 0; a < ncand; ++a)
        for (int b = a + 1; b < ncand; ++b) {
            if (a / per_point == b / per_point) continue;
            int found = -1, count = 0;
            for (std::size_t qi = 0; qi < quads.size(); ++qi)
                if (quads[qi].onmask.test(std::size_t(a)) &&
                    quads[qi].onmask.test(std::size_t(b))) {
                    found = int(qi);
                    if (++count > 1) break;
                }
            bool disjoint = !meets[std::size_t(a)].test(std::size_t(b));
            if (disjoint && count != 1)
                throw StructureError("disjoint pair not on exactly one pencil quadric");
            if (count == 1) {
                pair_quad[std::size_t(a) * std::size_t(ncand) + std::size_t(b)] =
                    std::int16_t(found);
                pair_quad[std::size_t(b) * std::size_t(ncand) + std::size_t(a)] =
                    std::int16_t(found);
            }
        }

    future_min.resize(std::size_t(n + 1));
    for (int done = 0; done <= n; ++done) {
        int r = q - done; // the next line can lose one point to each chosen line
        future_min[std::size_t(done)] = r > 0 ? r * (r + 1) / 2 : 0;
    }

    int bits = n * (n - 1) / 2;
    canon_memo.resize(std::size_t(1) << bits);
    // Bit permutation tables, as in the graph census.
    std::vector<int> perm(std::size_t(n), 0);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps;
    do {
        std::vector<int> bm(std::size_t(bits), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int pi = perm[std::size_t(i)], pj = perm[std::size_t(j)];
                if (pi > pj) std::swap(pi, pj);
                bm[std::size_t(edge_bit_index(n, pi, pj))] = edge_bit_index(n, i, j);
            }
        bit_maps.push_back(std::move(bm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::uint32_t best = mask;
        for (const auto& bm : bit_maps) {
            std::uint32_t img = 0;
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1) img |= 1u << bm[std::size_t(b)];
            best = std::min(best, img);
        }
        canon_memo[mask] = best;
    }
}

struct Shard {
    std::map<CensusKey, std::uint64_t> census;
    std::uint64_t sets = 0, leaves = 0, nodes = 0, pruned = 0;
    std::uint64_t complete = 0, complete_conc = 0;
    std::vector<nlohmann::json> unexplained;
};

struct Runner {
    const Tables& T;
    std::optional<int> threshold;
    int bound;
    Shard out;
    std::array<int, 8> chosen{};

    void leaf(const PointBits& cover) {
        ++out.leaves;
        int size = cover.count();
        int n = T.n, ncand = T.ncand;
        std::uint32_t mask = 0;
        bool any_disjoint = false;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (T.meets[std::size_t(chosen[std::size_t(i)])].test(
                        std::size_t(chosen[std::size_t(j)])))
                    mask |= 1u << edge_bit_index(n, i, j);
                else
                    any_disjoint = true;
            }
        int variant = 2, klo = -1, khi = -1;

        auto try_quad = [&](int qid, bool want_full) {
            const QuadData& Q = T.quads[std::size_t(qid)];
            int oncount = 0, leftover = -1, side_r = 0;
            for (int i = 0; i < n; ++i) {
                int id = chosen[std::size_t(i)];
                if (Q.onmask.test(std::size_t(id))) {
                    ++oncount;
                    if (Q.side_r.test(std::size_t(id))) ++side_r;
                } else {
                    leftover = id;
                }
            }
            if (want_full) {
                if (oncount != n) return false;
                variant = 0;
                klo = std::min(side_r, n - side_r);
                khi = n - klo;
                return true;
            }
            if (oncount != n - 1) return false;
            int sec = Q.sec_second[std::size_t(leftover)];
            if (sec < 0) return false;
            bool qualifies = false;
            for (int i = 0; i < n && !qualifies; ++i) {
                int id = chosen[std::size_t(i)];
                qualifies = id != leftover && Q.onmask.test(std::size_t(id)) &&
                            T.cover[std::size_t(id)].test(std::size_t(sec));
            }
            if (!qualifies) return false;
            variant = 1;
            klo = std::min(side_r, (n - 1) - side_r);
            khi = (n - 1) - klo;
            return true;
        };

        bool done = false;
        for (int pass = 0; pass < 2 && !done; ++pass)
            for (int i = 0; i < n && !done; ++i)
                for (int j = i + 1; j < n && !done; ++j) {
                    int a = chosen[std::size_t(i)], b = chosen[std::size_t(j)];
                    if (T.meets[std::size_t(a)].test(std::size_t(b))) continue;
                    int qid = T.pair_quad[std::size_t(a) * std::size_t(ncand) + std::size_t(b)];
                    done = try_quad(qid, pass == 0);
                }
        if (!any_disjoint) {
            ++out.complete;
            PointBits common = T.cover[std::size_t(chosen[0])];
            for (int i = 1; i < n; ++i) common &= T.cover[std::size_t(chosen[std::size_t(i)])];
            if (!common.empty()) ++out.complete_conc;
            // All pairs meet: only a meeting pair on a unique pencil quadric
            // can seed a secant witness.
            for (int i = 0; i < n && !done; ++i)
                for (int j = i + 1; j < n && !done; ++j) {
                    int a = chosen[std::size_t(i)], b = chosen[std::size_t(j)];
                    int qid = T.pair_quad[std::size_t(a) * std::size_t(ncand) + std::size_t(b)];
                    if (qid >= 0) done = try_quad(qid, false);
                }
        }

        ++out.sets;
        ++out.census[CensusKey{size, T.canon_memo[mask], variant, klo, khi}];
        if (variant != 0 && size < bound && out.unexplained.size() < 32) {
            std::vector<ProjLine> lines{std::size_t(n), ProjLine{}};
            for (int i = 0; i < n; ++i) lines[std::size_t(i)] = T.cand[std::size_t(chosen[std::size_t(i)])];
            out.unexplained.push_back(
                line_set_to_json(make_line_set(T.field, T.conic, std::move(lines))));
        }
    }

    void dfs(int depth, PointBits cover) {
        ++out.nodes;
        if (depth == T.n) {
            leaf(cover);
            return;
        }
        for (int s = 0; s < T.per_point; ++s) {
            int id = depth * T.per_point + s;
            PointBits nc = cover | T.cover[std::size_t(id)];
            if (threshold &&
                nc.count() + T.future_min[std::size_t(depth + 1)] >= *threshold) {
                ++out.pruned;
                continue;
            }
            chosen[std::size_t(depth)] = id;
            dfs(depth + 1, nc);
        }
    }

    // Seeds the fixed prefix slots, then searches the remaining depths.
    void run_prefix(const std::vector<int>& prefix_slots) {
        PointBits cover{};
        int depth = 0;
        for (int s : prefix_slots) {
            int id = depth * T.per_point + s;
            cover |= T.cover[std::size_t(id)];
            if (threshold &&
                cover.count() + T.future_min[std::size_t(depth + 1)] >= *threshold) {
                ++out.pruned;
                return;
            }
            chosen[std::size_t(depth)] = id;
            ++depth;
        }
        dfs(depth, cover);
    }
};

} // namespace

ClassificationReport enumerate_all(const SearchConfig& config) {
    auto [p, deg] = factor_prime_power(config.q);
    if (config.q > 5)
        throw BudgetExceeded("exhaustive enumeration supports q <= 4, q = 5 with a threshold");
    if (config.q == 5 && !config.threshold)
        throw BudgetExceeded("q = 5 requires a size threshold (pruned search)");
    // q(q+1) is the largest possible size; q(q+1)+1 keeps every set while
    // still exercising the prune arithmetic.
    if (config.threshold && (*config.threshold < 1 ||
                             *config.threshold > int(config.q * (config.q + 1)) + 1))
        throw InvalidArgument("threshold must lie in [1, q(q+1)+1]");
    if (config.workers < 1) throw InvalidArgument("worker count must be positive");

    Tables T(p, deg);
    int bound = classification_threshold(config.q);

    std::vector<std::vector<int>> prefixes;
    if (config.symmetry_reduction) {
        // Translations act transitively on the q^2 candidates through the
        // first conic point, with a stabilizer of order q, so fixing slot 0
        // scales every census count by exactly q^2.
        for (int s = 0; s < T.per_point; ++s) prefixes.push_back({0, s});
    } else {
        for (int s = 0; s < T.per_point; ++s) prefixes.push_back({s});
    }

    std::vector<Shard> results(prefixes.size());
    int workers = std::min<int>(config.workers, int(prefixes.size()));
    auto work = [&](int w) {
        for (std::size_t pi = std::size_t(w); pi < prefixes.size(); pi += std::size_t(workers)) {
            Runner r{T, config.threshold, bound, {}, {}};
            r.run_prefix(prefixes[pi]);
            results[pi] = std::move(r.out);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    ClassificationReport rep;
    rep.config = config;
    rep.theorem_threshold = bound;
    for (const Shard& s : results) {
        for (const auto& [key, count] : s.census) rep.census[key] += count;
        rep.sets_enumerated += s.sets;
        rep.leaves_visited += s.leaves;
        rep.nodes_visited += s.nodes;
        rep.pruned_branches += s.pruned;
        rep.complete_gamma_sets += s.complete;
        rep.complete_gamma_concurrent += s.complete_conc;
        for (const auto& u : s.unexplained)
            if (rep.unexplained.size() < 32) rep.unexplained.push_back(u);
    }
    if (config.symmetry_reduction) {
        rep.scale = T.per_point;
        for (auto& [key, count] : rep.census) count *= std::uint64_t(rep.scale);
        rep.sets_enumerated *= std::uint64_t(rep.scale);
        rep.complete_gamma_sets *= std::uint64_t(rep.scale);
        rep.complete_gamma_concurrent *= std::uint64_t(rep.scale);
    }
    return rep;
}

} // namespace kakeya
