#include "movcone/contraction.hpp"

#include <random>

#include "movcone/errors.hpp"
#include "movcone/linalg.hpp"

namespace movcone {

namespace {

const QMat& require_maps(const ContractionInfo& info) {
    if (!info.target || !info.pushforward || !info.pullback)
        throw DomainError("no target recorded for this contraction");
    return *info.pushforward;
}

// Exact inverse through repeated solves against the pairing.
QMat solve_against(const QMat& lhs, const QMat& rhs) {
    QMat x(lhs.cols(), rhs.cols());
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        auto column = solve(lhs, rhs.col(j));
        if (!column) throw DomainError("singular pairing while deriving curve maps");
        x.col(j) = *column;
    }
    return x;
}

}  // namespace

DivisorClass pushforward_divisor(const ContractionInfo& info, const DivisorClass& d_x) {
    require_maps(info);
    if (d_x.coords.size() != info.pushforward->cols())
        throw DomainError("pushforward_divisor: dimension mismatch");
    return DivisorClass{*info.target, *info.pushforward * d_x.coords};
}

DivisorClass pullback_divisor(const ContractionInfo& info, const VarietyData& v_x,
                              const DivisorClass& d_y) {
    require_maps(info);
    if (d_y.coords.size() != info.pullback->cols())
        throw DomainError("pullback_divisor: dimension mismatch");
    return DivisorClass{v_x.name, *info.pullback * d_y.coords};
}

const CurveMaps& curve_maps(const ContractionInfo& info, const VarietyData& v_x,
                            const VarietyData& v_y) {
    require_maps(info);
    std::call_once(info.cache->once, [&] {
        CurveMaps maps;
        // D . pull(c) = push(D) . c for all D gives
        // P_X * pull = push^T * P_Y; the pairing is invertible, so the
        // solution is unique. Same shape for the pushforward.
        maps.pullback = solve_against(v_x.pairing, info.pushforward->transpose() * v_y.pairing);
        maps.pushforward = solve_against(v_y.pairing, info.pullback->transpose() * v_x.pairing);
        info.cache->maps = std::move(maps);
    });
    return *info.cache->maps;
}

CurveClass numerical_pullback(const ContractionInfo& info, const VarietyData& v_x,
                              const VarietyData& v_y, const CurveClass& c_y) {
    if (c_y.variety != v_y.name) throw DomainError("numerical_pullback: class not on the target");
    return CurveClass{v_x.name, curve_maps(info, v_x, v_y).pullback * c_y.coords};
}

CurveClass numerical_pushforward(const ContractionInfo& info, const VarietyData& v_x,
                                 const VarietyData& v_y, const CurveClass& c_x) {
    if (c_x.variety != v_x.name) throw DomainError("numerical_pushforward: class not on the source");
    return CurveClass{v_y.name, curve_maps(info, v_x, v_y).pushforward * c_x.coords};
}

bool check_projection_formula(const ContractionInfo& info, const VarietyData& v_x,
                              const VarietyData& v_y, unsigned trials, std::uint64_t seed) {
    curve_maps(info, v_x, v_y);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto random_vec = [&](Eigen::Index n) {
        QVec v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = Rat(num(rng), den(rng));
        return v;
    };
    for (unsigned t = 0; t < trials; ++t) {
        const CurveClass c_y{v_y.name, random_vec(v_y.rho)};
        const DivisorClass d_x{v_x.name, random_vec(v_x.rho)};
        if (pair(v_x, d_x, numerical_pullback(info, v_x, v_y, c_y)) !=
            pair(v_y, pushforward_divisor(info, d_x), c_y))
            return false;
        const CurveClass c_x{v_x.name, random_vec(v_x.rho)};
        const DivisorClass d_y{v_y.name, random_vec(v_y.rho)};
        if (pair(v_x, pullback_divisor(info, v_x, d_y), c_x) !=
            pair(v_y, d_y, numerical_pushforward(info, v_x, v_y, c_x)))
            return false;
    }
    return true;
}

bool check_dual_map_identities(const ContractionInfo& info, const VarietyData& v_x,
                               const VarietyData& v_y) {
    const CurveMaps& maps = curve_maps(info, v_x, v_y);

    // i) pushforward o pullback = id on curve classes of the target.
    if (!mat_eq(maps.pushforward * maps.pullback, QMat::Identity(v_y.rho, v_y.rho))) return false;

    // ii) pullback_divisor(D) . pullback(c) = D . c on all basis pairs.
    for (Eigen::Index i = 0; i < v_y.rho; ++i) {
        QVec d = QVec::Zero(v_y.rho);
        d(i) = 1;
        const QVec pulled_divisor = *info.pullback * d;
        for (Eigen::Index j = 0; j < v_y.rho; ++j) {
            QVec c = QVec::Zero(v_y.rho);
            c(j) = 1;
            const QVec pulled_curve = maps.pullback * c;
            if (dot(pulled_divisor, v_x.pairing * pulled_curve) != v_y.pairing(i, j)) return false;
        }
    }

    // iii) ker(divisor pushforward) pairs to zero with every pulled-back
    // curve class.
    for (const QVec& k : kernel_basis(*info.pushforward)) {
        for (Eigen::Index j = 0; j < v_y.rho; ++j) {
            QVec c = QVec::Zero(v_y.rho);
            c(j) = 1;
            if (dot(k, v_x.pairing * (maps.pullback * c)) != 0) return false;
        }
    }
    return true;
}

CorrespondenceReport check_extremal_correspondence(const ContractionInfo& info,
                                                   const VarietyData& v_x,
                                                   const VarietyData& v_y) {
    if (info.kind != ContractionKind::divisorial)
        throw DomainError("extremal correspondence requires a divisorial contraction");
    const CurveMaps& maps = curve_maps(info, v_x, v_y);
    const Cone sme_x = sme_cone(v_x);
    const Cone sme_y = sme_cone(v_y);
    const QVec& exc = info.exceptional_divisor->coords;

    CorrespondenceReport report;
    for (const QVec& c : sme_y.extremal_rays()) {
        CorrespondenceRow row;
        row.direction = "forward";
        row.source_ray = c;
        row.mapped_ray = maps.pullback * c;
        try {
            row.pass = sme_x.is_extremal_face({row.mapped_ray});
            row.note = row.pass ? "pullback is extremal in SME(source)"
                                : "pullback is not extremal in SME(source)";
        } catch (const DomainError&) {
            row.pass = false;
            row.note = "pullback lies outside SME(source)";
        }
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }

    for (const QVec& r : sme_x.extremal_rays()) {
        CorrespondenceRow row;
        row.direction = "reverse";
        row.source_ray = r;
        if (dot(exc, v_x.pairing * r) != 0) {
            row.pass = true;
            row.note = "not on the exceptional wall; excluded by hypothesis";
            report.rows.push_back(std::move(row));
            continue;
        }
        row.mapped_ray = maps.pushforward * r;
        const QVec recovered = maps.pullback * row.mapped_ray;
        bool ok = vec_eq(recovered, r);
        std::string note = ok ? "recovered by pullback of pushforward"
                              : "pullback of pushforward differs from the ray";
        if (ok) {
            try {
                ok = sme_y.is_extremal_face({row.mapped_ray});
                note = ok ? "pushforward is extremal in SME(target)"
                          : "pushforward is not extremal in SME(target)";
            } catch (const DomainError&) {
                ok = false;
                note = "pushforward lies outside SME(target)";
            }
        }
        row.pass = ok;
        row.note = std::move(note);
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void validate_contraction_link(const ContractionInfo& info, const VarietyData& v_x,
                               const VarietyData& v_y) {
    require_maps(info);
    if (*info.target != v_y.name)
        throw ValidationError("contraction target '" + *info.target + "' is not '" + v_y.name + "'");
    if (info.pushforward->rows() != v_y.rho || info.pushforward->cols() != v_x.rho)
        throw ValidationError("pushforward shape does not match rho(" + v_y.name + ") x rho(" +
                              v_x.name + ")");
    if (info.pullback->rows() != v_x.rho || info.pullback->cols() != v_y.rho)
        throw ValidationError("pullback shape does not match rho(" + v_x.name + ") x rho(" +
                              v_y.name + ")");
}

}  // namespace movcone
