#include "csk/pseudo_variance.hpp"

#include <algorithm>
#include <cmath>

#include "csk/family.hpp"

namespace csk {

namespace {

constexpr double kPi = 3.141592653589793;

void check_leading(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw InvalidPV("leading variance coefficient must be positive");
}

}  // namespace

PseudoVariance::PseudoVariance(QuadraticPV q) : form_(q) {
    check_leading(q.a);
    if (!std::isfinite(q.b) || !std::isfinite(q.c) || !std::isfinite(q.m0))
        throw InvalidPV("quadratic pseudo-variance parameters must be finite");
}

PseudoVariance::PseudoVariance(CubicPV c) : form_(c) {
    check_leading(c.a);
    if (!std::isfinite(c.b) || !std::isfinite(c.c))
        throw InvalidPV("cubic pseudo-variance parameters must be finite");
}

PseudoVariance::PseudoVariance(std::shared_ptr<const CSKFamily> family)
    : form_(std::move(family)) {
    if (!std::get<std::shared_ptr<const CSKFamily>>(form_))
        throw InvalidPV("numeric pseudo-variance requires a family");
}

bool PseudoVariance::is_closed_form() const {
    return !std::holds_alternative<std::shared_ptr<const CSKFamily>>(form_);
}

double PseudoVariance::operator()(double m) const {
    if (const QuadraticPV* q = quadratic()) {
        if (m == q->m0)
            throw DomainError("pseudo-variance undefined at m = m0");
        return m * (q->a - q->b * m + q->c * m * m) / (m - q->m0);
    }
    if (const CubicPV* c = cubic())
        return m * (c->a * m * m + c->b * m + c->c);
    return std::get<std::shared_ptr<const CSKFamily>>(form_)->pseudo_variance(m);
}

std::complex<double> sqrt_tail(std::complex<double> u,
                               std::complex<double> k2) {
    return u * std::sqrt(1.0 - k2 / (u * u));
}

std::complex<double> quadratic_m_branch(const QuadraticPV& q,
                                        std::complex<double> z) {
    const double Ahat = 1.0 + q.c;
    const std::complex<double> Bhat = -(q.b + z + q.m0);
    const std::complex<double> C = q.a + z * q.m0;
    if (std::abs(Ahat) < 1e-14) return -C / Bhat;
    const std::complex<double> D = sqrt_tail(Bhat, 4.0 * Ahat * C);
    return 2.0 * C / (-Bhat - D);
}

std::complex<double> quadratic_g(const QuadraticPV& q, std::complex<double> z) {
    const std::complex<double> m = quadratic_m_branch(q, z);
    return (m - q.m0) / (q.a - q.b * m + q.c * m * m);
}

std::pair<double, double> quadratic_branch_points(const QuadraticPV& q) {
    // Discriminant of the defining quadratic as a polynomial in z.
    const double Ahat = 1.0 + q.c;
    const double p = 2.0 * (q.b + q.m0) - 4.0 * Ahat * q.m0;
    const double qq = (q.b + q.m0) * (q.b + q.m0) - 4.0 * Ahat * q.a;
    const double rad = p * p - 4.0 * qq;
    if (!(rad > 0.0))
        throw InvalidPV("branch points of the Cauchy transform are not real");
    const double s = std::sqrt(rad);
    return {(-p - s) / 2.0, (-p + s) / 2.0};
}

namespace {

RealMeasure cubic_generating_measure(const CubicPV& pv) {
    const double a = pv.a, b = pv.b, c = pv.c;
    const double edge = c - (b + 1.0) * (b + 1.0) / (4.0 * a);

    std::vector<Atom> atoms;
    const double disc = b * b - 4.0 * a * c;
    if (disc > 1.0) {
        const double s = std::sqrt(disc);
        atoms.push_back({-(b + s) / (2.0 * a), 1.0 - 1.0 / s});
    }

    DensityPart dens;
    dens.density = [a, b, c, edge](double x) {
        const double rad = 4.0 * a * (edge - x);
        if (rad <= 0.0) return 0.0;
        return std::sqrt(rad) / (2.0 * kPi * (c + b * x + a * x * x));
    };
    dens.support_lower = -kInf;
    dens.support_upper = edge;
    dens.left_tail_exponent = 1.5;

    try {
        return RealMeasure(std::move(dens), std::move(atoms));
    } catch (const InvalidSpec& e) {
        throw InvalidPV(std::string("cubic pseudo-variance rejected: ") +
                        e.what());
    }
}

double quadratic_residue_at(const QuadraticPV& q, double mu, double s,
                            double h0) {
    // Weight of the candidate pole z = mu: s*h*G(mu + s*h) -> w linearly in
    // h, removed by two Richardson levels.
    auto w = [&](double h) {
        const std::complex<double> g = quadratic_g(q, {mu + s * h, 0.0});
        return s * h * g.real();
    };
    const double w0 = w(h0), w1 = w(h0 / 2.0), w2 = w(h0 / 4.0);
    const double r0 = 2.0 * w1 - w0, r1 = 2.0 * w2 - w1;
    return (4.0 * r1 - r0) / 3.0;
}

RealMeasure quadratic_generating_measure(const QuadraticPV& q) {
    const double Ahat = 1.0 + q.c;

    // Continuous part: between the real branch points, when they exist.
    bool has_cont = false;
    double x_minus = 0.0, x_plus = 0.0;
    {
        const double p = 2.0 * (q.b + q.m0) - 4.0 * Ahat * q.m0;
        const double qq = (q.b + q.m0) * (q.b + q.m0) - 4.0 * Ahat * q.a;
        const double rad = p * p - 4.0 * qq;
        if (rad > 1e-12 * (1.0 + p * p + std::abs(qq))) {
            const double s = std::sqrt(rad);
            x_minus = (-p - s) / 2.0;
            x_plus = (-p + s) / 2.0;
            has_cont = true;
        }
    }

    const double scale =
        1.0 + std::max({std::abs(x_minus), std::abs(x_plus), std::abs(q.b),
                        std::abs(q.m0), std::sqrt(q.a)});

    std::optional<DensityPart> dens;
    if (has_cont) {
        // Boundary values of G from the upper half-plane; the nudge keeps the
        // square-root branch on the correct side of the slit.
        auto boundary_density = [q](double x) {
            const std::complex<double> g = quadratic_g(q, {x, 1e-150});
            return std::max(0.0, -g.imag() / kPi);
        };
        const double width = x_plus - x_minus;
        for (int i = 1; i < 40; ++i) {
            const double x = x_minus + width * i / 40.0;
            const std::complex<double> g = quadratic_g(q, {x, 1e-150});
            if (-g.imag() / kPi < -1e-10)
                throw InvalidPV("Cauchy transform branch yields a signed density");
        }
        DensityPart d;
        d.density = boundary_density;
        d.support_lower = x_minus;
        d.support_upper = x_plus;
        dens = std::move(d);
    }

    // Atom candidates are the zeros of V(m) = a - b m + c m^2, which map to
    // z = mu; probe each with a residue fit.
    std::vector<double> mus;
    if (std::abs(q.c) > 1e-13) {
        const double dv = q.b * q.b - 4.0 * q.a * q.c;
        if (dv >= 0.0) {
            const double s = std::sqrt(dv);
            mus.push_back((q.b - s) / (2.0 * q.c));
            mus.push_back((q.b + s) / (2.0 * q.c));
        }
    } else if (std::abs(q.b) > 1e-13) {
        mus.push_back(q.a / q.b);
    }
    std::sort(mus.begin(), mus.end());

    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const double mu = mus[i];
        const double pad = 1e-9 * scale;
        if (has_cont && mu >= x_minus - pad && mu <= x_plus + pad) continue;
        double s = 1.0;
        if (has_cont && mu < x_minus) s = -1.0;
        double h0 = 1e-5 * scale;
        for (std::size_t j = 0; j < mus.size(); ++j)
            if (j != i && std::abs(mus[j] - mu) > 0.0)
                h0 = std::min(h0, 0.1 * std::abs(mus[j] - mu));
        if (has_cont) {
            const double gap =
                s > 0.0 ? mu - x_plus : x_minus - mu;
            h0 = std::min(h0, 0.1 * gap);
        }
        const double w = quadratic_residue_at(q, mu, s, h0);
        if (w > 1e-8) atoms.push_back({mu, std::min(w, 1.0)});
    }

    // Nevanlinna and normalization checks on the algebraic transform.
    {
        const double zinf = 1e6 * scale;
        const std::complex<double> g = quadratic_g(q, {zinf, 0.0});
        if (std::abs(zinf * g.real() - 1.0) > 1e-3)
            throw InvalidPV("Cauchy transform is not normalized at infinity");
        if (has_cont) {
            const double mid = 0.5 * (x_minus + x_plus);
            const double width = x_plus - x_minus;
            for (int k = 1; k <= 4; ++k) {
                const std::complex<double> gz =
                    quadratic_g(q, {mid + 0.1 * k * width, 0.25 * k * width});
                if (gz.imag() > 1e-12)
                    throw InvalidPV("Cauchy transform leaves the lower half-plane");
            }
        }
    }

    try {
        return RealMeasure(std::move(dens), std::move(atoms));
    } catch (const InvalidSpec& e) {
        throw InvalidPV(std::string("quadratic pseudo-variance rejected: ") +
                        e.what());
    }
}

}  // namespace

RealMeasure pv_to_generator(const PseudoVariance& pv) {
    if (const CubicPV* c = pv.cubic()) return cubic_generating_measure(*c);
    if (const QuadraticPV* q = pv.quadratic())
        return quadratic_generating_measure(*q);
    throw InvalidPV(
        "only quadratic and cubic pseudo-variance shapes are invertible");
}

}  // namespace csk
