#include "shockorder/theorem_engine.hpp"

#include <array>
#include <stdexcept>

namespace shockorder {

namespace {

constexpr CurvatureTag kIncConcave{ThetaMonotonicity::IncreasingInTheta,
                                   ThetaLogCurvature::LogConcaveInTheta};
constexpr CurvatureTag kDecConvex{ThetaMonotonicity::DecreasingInTheta,
                                  ThetaLogCurvature::LogConvexInTheta};

// One row per ordering result. Columns: structure; relation between alpha and
// beta; cones required of alpha, beta, shocks; additivity mode of
// psi_y(phi_x(.)); transform + direction (signed convention, see the header);
// survival-curvature tag; concluded order.
constexpr std::array<TheoremSpec, 8> kTable{{
    {TheoremId::T3_1, Structure::Parallel, Relation::AlphaWeakSupBeta, Cone::DPlus, Cone::DPlus,
     Cone::DPlus, AdditivityMode::Super, TransformKind::TPsiPrimeOneMinusT, Direction::Decreasing,
     kIncConcave, {SystemLabel::Y, Statistic::Max}},
    {TheoremId::T3_2, Structure::Parallel, Relation::BetaMajAlpha, Cone::DPlus, Cone::DPlus,
     Cone::IPlus, AdditivityMode::Super, TransformKind::TPsiPrimeOneMinusT, Direction::Decreasing,
     kDecConvex, {SystemLabel::Y, Statistic::Max}},
    {TheoremId::T3_3, Structure::Series, Relation::BetaMajAlpha, Cone::DPlus, Cone::DPlus,
     Cone::DPlus, AdditivityMode::Super, TransformKind::TPsiPrimeT, Direction::Increasing,
     kIncConcave, {SystemLabel::X, Statistic::Min}},
    {TheoremId::T3_4, Structure::Series, Relation::AlphaWeakSupBeta, Cone::DPlus, Cone::DPlus,
     Cone::IPlus, AdditivityMode::Super, TransformKind::TPsiPrimeT, Direction::Decreasing,
     kDecConvex, {SystemLabel::X, Statistic::Min}},
    {TheoremId::T4_1, Structure::Parallel, Relation::BetaWeakSupAlpha, Cone::DPlus, Cone::DPlus,
     Cone::DPlus, AdditivityMode::Sub, TransformKind::TPsiPrimeOneMinusT, Direction::Decreasing,
     kIncConcave, {SystemLabel::X, Statistic::Max}},
    {TheoremId::T4_2, Structure::Parallel, Relation::AlphaMajBeta, Cone::DPlus, Cone::DPlus,
     Cone::IPlus, AdditivityMode::Sub, TransformKind::TPsiPrimeOneMinusT, Direction::Decreasing,
     kDecConvex, {SystemLabel::X, Statistic::Max}},
    {TheoremId::T4_3, Structure::Series, Relation::AlphaMajBeta, Cone::DPlus, Cone::DPlus,
     Cone::DPlus, AdditivityMode::Sub, TransformKind::TPsiPrimeT, Direction::Increasing,
     kIncConcave, {SystemLabel::Y, Statistic::Min}},
    {TheoremId::T4_4, Structure::Series, Relation::BetaWeakSupAlpha, Cone::DPlus, Cone::DPlus,
     Cone::IPlus, AdditivityMode::Sub, TransformKind::TPsiPrimeT, Direction::Decreasing,
     kDecConvex, {SystemLabel::Y, Statistic::Min}},
}};

constexpr std::array<TheoremId, 4> kParallelIds{TheoremId::T3_1, TheoremId::T3_2, TheoremId::T4_1,
                                                TheoremId::T4_2};
constexpr std::array<TheoremId, 4> kSeriesIds{TheoremId::T3_3, TheoremId::T3_4, TheoremId::T4_3,
                                              TheoremId::T4_4};
constexpr std::array<TheoremId, 8> kAllIds{TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3,
                                           TheoremId::T3_4, TheoremId::T4_1, TheoremId::T4_2,
                                           TheoremId::T4_3, TheoremId::T4_4};

}  // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T3_1: return "T3_1";
        case TheoremId::T3_2: return "T3_2";
        case TheoremId::T3_3: return "T3_3";
        case TheoremId::T3_4: return "T3_4";
        case TheoremId::T4_1: return "T4_1";
        case TheoremId::T4_2: return "T4_2";
        case TheoremId::T4_3: return "T4_3";
        case TheoremId::T4_4: return "T4_4";
    }
    return "?";
}

const TheoremSpec& theorem_spec(TheoremId id) {
    for (const TheoremSpec& spec : kTable)
        if (spec.id == id) return spec;
    throw std::invalid_argument("unknown theorem id");
}

std::span<const TheoremId> theorems_for(Structure structure) {
    return structure == Structure::Parallel ? std::span<const TheoremId>(kParallelIds)
                                            : std::span<const TheoremId>(kSeriesIds);
}

std::span<const TheoremId> all_theorems() { return kAllIds; }

std::string conclusion_text(const OrderingConclusion& c) {
    const char* stat = c.statistic == Statistic::Max ? "n:n" : "1:n";
    const char* small = c.smaller == SystemLabel::X ? "X" : "Y";
    const char* large = c.smaller == SystemLabel::X ? "Y" : "X";
    return std::string(small) + "_{" + stat + "} <=_st " + large + "_{" + stat + "}";
}

}  // namespace shockorder
