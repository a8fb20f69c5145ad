#include "lipsat/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lipsat/errors.hpp"

namespace lipsat {

std::string to_string(VerdictHint h) {
    switch (h) {
        case VerdictHint::Bounded: return "bounded";
        case VerdictHint::Diverging: return "diverging";
        case VerdictHint::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using Cplx = std::complex<double>;

// uniform in [0,1) from the raw engine stream: identical on every platform,
// unlike uniform_real_distribution
double unit(std::mt19937_64& rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

Cplx annulus_point(std::mt19937_64& rng, double scale) {
    double r = scale * (0.5 + 0.5 * unit(rng));
    double phi = 2.0 * M_PI * unit(rng);
    return Cplx(r * std::cos(phi), r * std::sin(phi));
}

Cplx eval_series(const Series& s, Cplx t) {
    Cplx v = 0.0;
    for (const auto& [e, c] : s.coeffs) v += c.get_d() * std::pow(t, e);
    return v;
}

Cplx eval_poly(const Polynomial& p, const std::vector<Cplx>& x) {
    Cplx v = 0.0;
    for (const auto& [m, c] : p.terms()) {
        Cplx t = c.get_d();
        for (std::size_t i = 0; i < m.nvars(); ++i)
            for (int k = 0; k < m.exps[i]; ++k) t *= x[i];
        v += t;
    }
    return v;
}

void finish(RatioReport& r, const EpsilonLadder& ladder) {
    // log-log slope against 1/scale, over scales that produced samples
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < r.scale_maxima.size(); ++i) {
        if (!(r.scale_maxima[i] > 0)) continue;
        double x = -std::log10(ladder.scales[i]);
        double y = std::log10(r.scale_maxima[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n >= 2 && sxx * n != sx * sx)
        r.growth_exponent_estimate = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    // diverging: some window of three consecutive scales with monotone
    // growth totalling at least one decade
    bool diverging = false, ever_grew = false;
    for (std::size_t i = 0; i + 2 < r.scale_maxima.size(); ++i) {
        double a = r.scale_maxima[i], b = r.scale_maxima[i + 1],
               c = r.scale_maxima[i + 2];
        if (a > 0 && b > a && c > b && c >= 10.0 * a) diverging = true;
    }
    for (std::size_t i = 0; i + 1 < r.scale_maxima.size(); ++i)
        if (r.scale_maxima[i + 1] > 2.0 * r.scale_maxima[i]) ever_grew = true;
    if (diverging)
        r.verdict_hint = VerdictHint::Diverging;
    else if (!ever_grew && !r.scale_maxima.empty() && r.scale_maxima.back() > 0)
        r.verdict_hint = VerdictHint::Bounded;
}

}  // namespace

RatioReport sample_ideal_ratio(const Polynomial& p,
                               const std::vector<Polynomial>& gens,
                               const std::vector<Branch>& branches,
                               const EpsilonLadder& ladder) {
    for (const auto& b : branches) {
        bool all_zero = true;
        for (const auto& g : gens)
            if (!series_compose(g, b.components).is_zero()) all_zero = false;
        if (all_zero && !gens.empty())
            throw DegenerateSample("all generators vanish along branch '" +
                                   b.name + "'");
    }
    std::mt19937_64 rng(ladder.seed);
    RatioReport r;
    for (double scale : ladder.scales) {
        double mx = 0.0;
        std::vector<double> raw;
        for (const auto& b : branches) {
            for (int k = 0; k < ladder.samples_per_scale; ++k) {
                Cplx t = annulus_point(rng, scale);
                std::vector<Cplx> x;
                x.reserve(b.components.size());
                for (const auto& s : b.components) x.push_back(eval_series(s, t));
                double den = 0.0;
                for (const auto& g : gens)
                    den = std::max(den, std::abs(eval_poly(g, x)));
                if (den < 1e-300) {
                    ++r.degenerate_count;
                    continue;
                }
                double ratio = std::abs(eval_poly(p, x)) / den;
                raw.push_back(ratio);
                mx = std::max(mx, ratio);
            }
        }
        r.scale_maxima.push_back(mx);
        r.samples.push_back(std::move(raw));
    }
    finish(r, ladder);
    return r;
}

RatioReport sample_lipschitz_ratio(const SaturationQuery& q,
                                   const std::vector<Branch>& branches,
                                   const EpsilonLadder& ladder) {
    const auto& images = q.morphism.images();
    std::mt19937_64 rng(ladder.seed);
    RatioReport r;
    for (double scale : ladder.scales) {
        double mx = 0.0;
        std::vector<double> raw;
        for (const auto& b1 : branches) {
            for (const auto& b2 : branches) {
                for (int k = 0; k < ladder.samples_per_scale; ++k) {
                    Cplx t1 = annulus_point(rng, scale);
                    Cplx t2 = annulus_point(rng, scale);
                    std::vector<Cplx> y1, y2;
                    for (const auto& s : b1.components) y1.push_back(eval_series(s, t1));
                    for (const auto& s : b2.components) y2.push_back(eval_series(s, t2));
                    double den = 0.0;
                    for (const auto& im : images)
                        den = std::max(den,
                                       std::abs(eval_poly(im, y1) - eval_poly(im, y2)));
                    double num =
                        std::abs(eval_poly(q.element, y1) - eval_poly(q.element, y2));
                    if (den < 1e-280) {  // numerically coincident images
                        if (num > 1e-12) ++r.degenerate_count;  // saturation hint
                        continue;
                    }
                    double ratio = num / den;
                    raw.push_back(ratio);
                    mx = std::max(mx, ratio);
                }
            }
        }
        r.scale_maxima.push_back(mx);
        r.samples.push_back(std::move(raw));
    }
    finish(r, ladder);
    return r;
}

}  // namespace lipsat
