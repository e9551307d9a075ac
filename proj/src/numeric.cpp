#include "circim/numeric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>

#include "circim/errors.hpp"

namespace circim {

namespace {

constexpr double kTau = 2 * std::numbers::pi;

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

std::vector<std::complex<double>> roots(const std::vector<std::complex<double>>& coeffs) {
    if (coeffs.size() < 2) throw input_error("root finding needs degree at least 1");
    if (std::abs(coeffs.back()) == 0.0) throw input_error("leading coefficient must not vanish");

    const int deg = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw internal_error("companion eigenvalue iteration failed");

    std::vector<std::complex<double>> deriv(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) deriv[i - 1] = coeffs[i] * static_cast<double>(i);

    std::vector<std::complex<double>> out;
    out.reserve(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        std::complex<double> z = solver.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const std::complex<double> f = horner(coeffs, z);
            const std::complex<double> fp = horner(deriv, z);
            if (std::abs(fp) == 0.0) break;
            const std::complex<double> next = z - f / fp;
            if (std::abs(horner(coeffs, next)) < std::abs(f))
                z = next;
            else
                break;
        }
        out.push_back(z);
    }
    return out;
}

std::complex<double> res_zeros_oracle(const LaurentPolynomial& p_in, std::complex<double> w) {
    const LaurentPolynomial p = normalize_orientation(p_in);
    const int n = p.degree();
    const int m = p.pole_order();

    std::vector<std::complex<double>> g(static_cast<size_t>(m + n) + 1, 0.0);
    for (const auto& [k, c] : p.terms()) g[static_cast<size_t>(k + m)] = c.to_complex();
    g[static_cast<size_t>(m)] -= w;

    const auto zs = roots(g);
    std::complex<double> prod = 1.0;
    for (const auto& zi : zs)
        for (const auto& zj : zs) prod *= zi * std::conj(zj) - 1.0;
    const double an_sq = p.coeff(n).abs_sq().to_double();
    return std::pow(an_sq, m + n) * prod;
}

CurveSample sample_curve(const LaurentPolynomial& p, int N) {
    if (N < 16) throw input_error("curve sampling needs at least 16 points");
    CurveSample s;
    s.params.reserve(static_cast<size_t>(N));
    s.points.reserve(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        const double t = kTau * j / N;
        const std::complex<double> v = p.eval(std::polar(1.0, t));
        s.params.push_back(t);
        s.points.emplace_back(v.real(), v.imag());
    }
    return s;
}

bool verify_extra_point(const LaurentPolynomial& p, const BivariatePolynomial& h,
                        std::complex<double> w, double delta, int N) {
    const double scale = std::max(1.0, h.coefficient_scale());
    if (!(std::abs(h.eval(w.real(), w.imag())) < 1e-8 * scale)) return false;
    const CurveSample s = sample_curve(p, N);
    for (const auto& [x, y] : s.points)
        if (std::hypot(x - w.real(), y - w.imag()) <= delta) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Intersection counting.

namespace {

double pq_distance(const LaurentPolynomial& p, const LaurentPolynomial& q, double s, double t) {
    return std::abs(p.eval(std::polar(1.0, s)) - q.eval(std::polar(1.0, t)));
}

}  // namespace

IntersectionCount count_intersections(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                      int grid, double tol) {
    if (grid < 64) throw input_error("intersection grid must have at least 64 cells per axis");
    if (!(tol > 0)) throw input_error("intersection tolerance must be positive");

    std::vector<std::complex<double>> P(static_cast<size_t>(grid)), Q(static_cast<size_t>(grid));
    double curve_scale = 1.0;
    for (int j = 0; j < grid; ++j) {
        const double t = kTau * j / grid;
        P[static_cast<size_t>(j)] = p.eval(std::polar(1.0, t));
        Q[static_cast<size_t>(j)] = q.eval(std::polar(1.0, t));
        curve_scale = std::max({curve_scale, std::abs(P[static_cast<size_t>(j)]),
                                std::abs(Q[static_cast<size_t>(j)])});
    }

    std::vector<double> d(static_cast<size_t>(grid) * grid);
    auto at = [&](int s, int t) -> double& {
        return d[static_cast<size_t>(((s % grid) + grid) % grid) * grid +
                 static_cast<size_t>(((t % grid) + grid) % grid)];
    };
    int below = 0;
    for (int s = 0; s < grid; ++s)
        for (int t = 0; t < grid; ++t) {
            const double v = std::abs(P[static_cast<size_t>(s)] - Q[static_cast<size_t>(t)]);
            at(s, t) = v;
            if (v < tol) ++below;
        }

    IntersectionCount out;
    out.overlap_suspected = below >= grid / 4;

    // Grid minima below tol, refined by coordinate descent on the torus.
    std::vector<std::pair<double, double>> hits;  // refined (s, t)
    int budget = 200;
    for (int s = 0; s < grid && budget > 0; ++s)
        for (int t = 0; t < grid && budget > 0; ++t) {
            const double v = at(s, t);
            if (v >= tol) continue;
            bool is_min = true;
            for (int ds = -1; ds <= 1 && is_min; ++ds)
                for (int dt = -1; dt <= 1; ++dt) {
                    if (ds == 0 && dt == 0) continue;
                    if (at(s + ds, t + dt) < v) {
                        is_min = false;
                        break;
                    }
                }
            if (!is_min) continue;
            --budget;

            double cs = kTau * s / grid, ct = kTau * t / grid;
            double best = v;
            double step = kTau / grid;
            for (int iter = 0; iter < 500 && step > 1e-12; ++iter) {
                bool moved = false;
                const double cands[4][2] = {{cs + step, ct}, {cs - step, ct}, {cs, ct + step}, {cs, ct - step}};
                for (const auto& c : cands) {
                    const double val = pq_distance(p, q, c[0], c[1]);
                    if (val < best) {
                        best = val;
                        cs = c[0];
                        ct = c[1];
                        moved = true;
                    }
                }
                if (!moved) step /= 2;
            }
            if (best < 1e-7 * curve_scale) hits.emplace_back(cs, ct);
        }

    // Cluster accepted hits by their image-space location.
    std::vector<std::complex<double>> reps;
    for (const auto& [cs, ct] : hits) {
        const std::complex<double> img =
            0.5 * (p.eval(std::polar(1.0, cs)) + q.eval(std::polar(1.0, ct)));
        bool fresh = true;
        for (const auto& r : reps)
            if (std::abs(r - img) < 10 * tol) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(img);
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
    });
    out.count = static_cast<int>(reps.size());
    for (const auto& r : reps) out.points.emplace_back(r.real(), r.imag());
    return out;
}

// ---------------------------------------------------------------------------
// Contouring.

namespace {

// Flattened polynomial for fast repeated real evaluation.
struct FlatPoly {
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms;
    int deg_x = 0, deg_y = 0;

    explicit FlatPoly(const BivariatePolynomial& h) {
        for (const auto& [ij, c] : h.terms()) {
            terms.push_back({ij.first, ij.second, c.re.to_double()});
            deg_x = std::max(deg_x, ij.first);
            deg_y = std::max(deg_y, ij.second);
        }
    }
};

// Identifies a cell edge of the grid without float comparisons.
struct EdgeId {
    int r, c;
    bool vertical;
    auto operator<=>(const EdgeId&) const = default;
};

}  // namespace

std::vector<Polyline> contour(const BivariatePolynomial& h, const BoundingBox& box, int resolution) {
    if (resolution < 32) throw input_error("contour resolution must be at least 32");
    if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) throw input_error("contour box must have positive extent");
    if (h.is_zero()) return {};
    if (h.tag() != VarTag::XY) throw input_error("contouring expects an (x, y) polynomial");

    const FlatPoly f(h);
    const int R = resolution;
    const double dx = (box.x1 - box.x0) / R;
    const double dy = (box.y1 - box.y0) / R;

    // Node values. Power tables per axis value are precomputed once.
    std::vector<std::vector<double>> px(static_cast<size_t>(R) + 1), py(static_cast<size_t>(R) + 1);
    for (int c = 0; c <= R; ++c) {
        const double x = box.x0 + c * dx;
        auto& t = px[static_cast<size_t>(c)];
        t.assign(static_cast<size_t>(f.deg_x) + 1, 1.0);
        for (int e = 1; e <= f.deg_x; ++e) t[static_cast<size_t>(e)] = t[static_cast<size_t>(e - 1)] * x;
    }
    for (int r = 0; r <= R; ++r) {
        const double y = box.y0 + r * dy;
        auto& t = py[static_cast<size_t>(r)];
        t.assign(static_cast<size_t>(f.deg_y) + 1, 1.0);
        for (int e = 1; e <= f.deg_y; ++e) t[static_cast<size_t>(e)] = t[static_cast<size_t>(e - 1)] * y;
    }
    std::vector<std::vector<double>> val(static_cast<size_t>(R) + 1,
                                         std::vector<double>(static_cast<size_t>(R) + 1));
    for (int r = 0; r <= R; ++r)
        for (int c = 0; c <= R; ++c) {
            double acc = 0.0;
            for (const auto& t : f.terms)
                acc += t.c * px[static_cast<size_t>(c)][static_cast<size_t>(t.i)] *
                       py[static_cast<size_t>(r)][static_cast<size_t>(t.j)];
            val[static_cast<size_t>(r)][static_cast<size_t>(c)] = acc;
        }

    // Interior is v < 0; nodes exactly on the level set count as outside,
    // which keeps tangential curves (such as a doubled line) renderable.
    auto inside = [&](int r, int c) { return val[static_cast<size_t>(r)][static_cast<size_t>(c)] < 0; };

    auto edge_point = [&](const EdgeId& e) -> std::pair<double, double> {
        const double v0 = val[static_cast<size_t>(e.r)][static_cast<size_t>(e.c)];
        const double v1 = e.vertical ? val[static_cast<size_t>(e.r) + 1][static_cast<size_t>(e.c)]
                                     : val[static_cast<size_t>(e.r)][static_cast<size_t>(e.c) + 1];
        double t = 0.5;
        if (v0 != v1) {
            t = v0 / (v0 - v1);
            if (!std::isfinite(t) || t < 0 || t > 1) t = 0.5;
        }
        const double x0 = box.x0 + e.c * dx;
        const double y0 = box.y0 + e.r * dy;
        return e.vertical ? std::make_pair(x0, y0 + t * dy) : std::make_pair(x0 + t * dx, y0);
    };

    // Per cell, connect crossing edges. Corner order: 0=(r,c) 1=(r,c+1)
    // 2=(r+1,c+1) 3=(r+1,c). Sides: 0 bottom, 1 right, 2 top, 3 left.
    std::vector<std::pair<EdgeId, EdgeId>> segments;
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < R; ++c) {
            const int code = (inside(r, c) ? 1 : 0) | (inside(r, c + 1) ? 2 : 0) |
                             (inside(r + 1, c + 1) ? 4 : 0) | (inside(r + 1, c) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            const EdgeId bottom{r, c, false};
            const EdgeId right{r, c + 1, true};
            const EdgeId top{r + 1, c, false};
            const EdgeId left{r, c, true};
            auto add = [&](EdgeId a, EdgeId b) { segments.emplace_back(a, b); };
            switch (code) {
                case 1: case 14: add(left, bottom); break;
                case 2: case 13: add(bottom, right); break;
                case 3: case 12: add(left, right); break;
                case 4: case 11: add(right, top); break;
                case 6: case 9: add(bottom, top); break;
                case 7: case 8: add(top, left); break;
                case 5: case 10: {
                    // Saddle: split by the sign at the cell center.
                    double cx = box.x0 + (c + 0.5) * dx, cy = box.y0 + (r + 0.5) * dy;
                    double center = 0.0;
                    for (const auto& t : f.terms)
                        center += t.c * std::pow(cx, t.i) * std::pow(cy, t.j);
                    const bool center_in = center < 0;
                    if ((code == 5) == center_in) {
                        add(left, top);
                        add(bottom, right);
                    } else {
                        add(left, bottom);
                        add(right, top);
                    }
                    break;
                }
                default: break;
            }
        }

    // Join segments into chains; every edge touches at most two segments.
    std::map<EdgeId, std::vector<size_t>> by_edge;
    for (size_t i = 0; i < segments.size(); ++i) {
        by_edge[segments[i].first].push_back(i);
        by_edge[segments[i].second].push_back(i);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;
    for (size_t start = 0; start < segments.size(); ++start) {
        if (used[start]) continue;
        // Walk backwards to a chain end (or around a loop).
        size_t seg = start;
        EdgeId tail = segments[seg].first;
        for (;;) {
            const auto& adj = by_edge[tail];
            size_t prev = segments.size();
            for (size_t cand : adj)
                if (cand != seg && !used[cand]) prev = cand;
            if (prev == segments.size()) break;
            seg = prev;
            tail = segments[seg].first == tail ? segments[seg].second : segments[seg].first;
            if (seg == start) break;  // closed loop
        }
        // Walk forwards collecting edges.
        Polyline line;
        EdgeId cur = tail;
        line.push_back(edge_point(cur));
        size_t walk = seg;
        for (;;) {
            used[walk] = true;
            cur = segments[walk].first == cur ? segments[walk].second : segments[walk].first;
            line.push_back(edge_point(cur));
            const auto& adj = by_edge[cur];
            size_t next = segments.size();
            for (size_t cand : adj)
                if (!used[cand]) next = cand;
            if (next == segments.size()) break;
            walk = next;
        }
        out.push_back(std::move(line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gap-point candidates.

std::vector<std::complex<double>> find_gap_candidates(const LaurentPolynomial& p_in,
                                                      const BivariatePolynomial& h,
                                                      double delta, int N) {
    const LaurentPolynomial p = normalize_orientation(p_in);
    LaurentPolynomial dp;  // p'
    for (const auto& [k, c] : p.terms())
        if (k != 0) dp.set_coeff(k - 1, c * GaussianRational(k));

    const auto reflect = [](std::complex<double> z) { return 1.0 / std::conj(z); };
    // F(z) = p(z) - p(1/conj(z)); dF = A dz + B dzbar with the values below.
    const auto F = [&](std::complex<double> z) { return p.eval(z) - p.eval(reflect(z)); };

    double coeff_scale = 0.0;
    for (const auto& [k, c] : p.terms()) coeff_scale += std::abs(c.to_complex());
    const double accept = 1e-9 * std::max(1.0, coeff_scale);

    std::vector<std::complex<double>> zs;
    for (int ir = 0; ir < 12; ++ir) {
        const double radius = 0.08 + 0.84 * ir / 11.0;
        for (int ia = 0; ia < 24; ++ia) {
            std::complex<double> z = std::polar(radius, kTau * ia / 24);
            bool ok = false;
            for (int it = 0; it < 60; ++it) {
                const std::complex<double> fz = F(z);
                if (std::abs(fz) < accept) {
                    ok = true;
                    break;
                }
                const std::complex<double> a = dp.eval(z);
                const std::complex<double> zb = std::conj(z);
                const std::complex<double> b = dp.eval(reflect(z)) / (zb * zb);
                const double denom = std::norm(a) - std::norm(b);
                if (std::abs(denom) < 1e-14) break;
                const std::complex<double> crhs = -fz;
                const std::complex<double> step = (std::conj(a) * crhs - b * std::conj(crhs)) / denom;
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
                z += step;
                if (std::abs(z) < 1e-8 || std::abs(z) > 1e8) break;
            }
            if (!ok) continue;
            if (std::abs(z) > 1.0) z = reflect(z);  // canonical representative
            if (std::abs(z) < 1e-6 || std::abs(z) > 1.0 - 1e-6) continue;
            bool fresh = true;
            for (const auto& seen : zs)
                if (std::abs(seen - z) < 1e-6) {
                    fresh = false;
                    break;
                }
            if (fresh) zs.push_back(z);
        }
    }

    std::vector<std::complex<double>> out;
    for (const auto& z : zs) {
        const std::complex<double> w = p.eval(z);
        bool fresh = true;
        for (const auto& seen : out)
            if (std::abs(seen - w) < 1e-6) {
                fresh = false;
                break;
            }
        if (fresh && verify_extra_point(p, h, w, delta, N)) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
    });
    return out;
}

}  // namespace circim
