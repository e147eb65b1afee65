#include <doctest.h>

#include "pencil/analysis.hpp"
#include "pencil/models.hpp"

using namespace pencil;

TEST_CASE("analysis of the spectral model") {
    const AnalysisReport report = analyze_pencil(dzektser_pencil(4));
    CHECK(report.exit_status == "ok");
    CHECK(report.diss.forward_ok);
    CHECK(report.diss.adjoint_ok);
    REQUIRE(report.resolvent_bounds_pass.has_value());
    CHECK(*report.resolvent_bounds_pass);
    REQUIRE(report.kernel_equivalence.has_value());
    CHECK(*report.kernel_equivalence);
    REQUIRE(report.radiality_bounded.has_value());
    CHECK(*report.radiality_bounded);
    CHECK(report.decomposable);
    CHECK(report.rank_E == 3);
    CHECK(report.dim_X0 == 1);
    const std::string text = report.to_text();
    CHECK(text.find("forward_ok=true") != std::string::npos);
    CHECK(text.find("exit_status=ok") != std::string::npos);
}

TEST_CASE("analysis of the gallery fixtures") {
    const auto gallery = negative_gallery();

    for (const auto& entry : gallery) {
        const AnalysisReport report = analyze_pencil(entry.pencil);
        switch (entry.expected) {
            case ExpectedFailure::IndexTwo:
                CHECK(report.exit_status == "not-decomposable");
                CHECK_FALSE(report.decomposable);
                REQUIRE(report.radiality_bounded.has_value());
                CHECK_FALSE(*report.radiality_bounded);
                break;
            case ExpectedFailure::EmptyResolventSet:
                CHECK(report.exit_status == "singular-pencil");
                CHECK_FALSE(report.diss.resolvent_witness.has_value());
                CHECK_FALSE(report.radiality_K.has_value());
                break;
            case ExpectedFailure::NotDissipative:
                CHECK(report.exit_status == "ok");
                CHECK_FALSE(report.diss.forward_ok);
                // The positive axis is partly singular, so the sweep and
                // the radiality estimate are unavailable.
                CHECK_FALSE(report.resolvent_bounds_pass.has_value());
                CHECK(report.to_text().find("resolvent_bounds_pass=skipped") !=
                      std::string::npos);
                break;
        }
    }
}

TEST_CASE("report text is stable across invocations") {
    const Pencil p = dzektser_pencil(3);
    const std::string a = analyze_pencil(p).to_text();
    const std::string b = analyze_pencil(p).to_text();
    CHECK(a == b);
}
