/*
 * Copyright 2026 The affectnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "affectnav/case_frame.hpp"
#include "affectnav/egc.hpp"
#include "../oracles/oracles.hpp"

using namespace affectnav;

TEST(Axes, SubjectObjectRow) {
    RoleValues fv;
    fv.s = 0.8;
    fv.o = 0.5;
    fv.p = 0.6;
    EXPECT_EQ(axes_for(Signature::V_S_O, fv), (AxisAssignment{0.8, 0.5, 0.6, false}));
    EgcConfig alt;
    alt.subject_object = SubjectObjectReading::kObjectOnly;
    EXPECT_EQ(axes_for(Signature::V_S_O, fv, alt), (AxisAssignment{0.5, 0.5, 0.6, true}));
}

TEST(Axes, AttributeRowUsesBeta) {
    RoleValues fv;
    fv.s = 0.3;
    fv.p = 0.4;
    EXPECT_EQ(axes_for(Signature::A_S_C, fv), (AxisAssignment{0.3, 0.5, 0.4, true}));
    EgcConfig cfg;
    cfg.beta = 0.25;
    EXPECT_EQ(axes_for(Signature::A_S_C, fv, cfg).f2, 0.25);
}

TEST(Axes, SubjectSourceDifference) {
    RoleValues fv;
    fv.s = 0.2;
    fv.os = 0.7;
    fv.p = 0.5;
    const AxisAssignment v = axes_for(Signature::V_S_OS, fv);
    EXPECT_NEAR(v.f1, -0.5, 1e-12);
    EXPECT_EQ(v.f2, 0.5);
    EXPECT_EQ(v.f3, 0.5);
    EXPECT_TRUE(v.used_beta);
}

TEST(Axes, FromToDifference) {
    RoleValues fv;
    fv.s = 0.4;
    fv.o = 0.9;
    fv.of = 0.1;
    fv.ot = 0.6;
    fv.om = 0.3;
    fv.p = -0.2;
    EXPECT_EQ(axes_for(Signature::V_S_OT, fv), (AxisAssignment{0.4, 0.6 - 0.1, -0.2, false}));
    EXPECT_EQ(axes_for(Signature::V_S_O_OF, fv), (AxisAssignment{0.9, 0.6 - 0.1, -0.2, false}));
    EXPECT_EQ(axes_for(Signature::V_S_O_OM, fv), (AxisAssignment{0.9, 0.3, 0.9, false}));
    EgcConfig cfg;
    cfg.object_mutual_f3 = ObjectMutualThirdAxis::kPredicate;
    EXPECT_EQ(axes_for(Signature::V_S_O_OM, fv, cfg), (AxisAssignment{0.9, 0.3, -0.2, false}));
}

TEST(Octant, PrintedAreas) {
    EXPECT_EQ(classify_octant({0.8, 0.5, 0.6}), (OctantClass{Area::kI, Valence::kPleasure}));
    EXPECT_EQ(classify_octant({-0.3, 0.5, 0.6}), (OctantClass{Area::kII, Valence::kDispleasure}));
    EXPECT_EQ(classify_octant({0.1, 0.0, -0.4}), (OctantClass{Area::kOnAxis, Valence::kNone}));
    EXPECT_EQ(classify_octant({-0.1, -0.1, 0.1}).area, Area::kIII);
    EXPECT_EQ(classify_octant({0.1, -0.1, 0.1}).area, Area::kIV);
    EXPECT_EQ(classify_octant({0.1, 0.1, -0.1}).area, Area::kV);
    EXPECT_EQ(classify_octant({-0.1, 0.1, -0.1}).area, Area::kVI);
    EXPECT_EQ(classify_octant({-0.1, -0.1, -0.1}).area, Area::kVII);
    EXPECT_EQ(classify_octant({0.1, -0.1, -0.1}).area, Area::kVIII);
}

TEST(Octant, SignFlipFlipsValence) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 0; n < 1000; ++n) {
        std::array<double, 3> c{};
        for (double& x : c) {
            do x = u(rng);
            while (x == 0.0);
        }
        const Valence base = classify_octant({c[0], c[1], c[2]}).valence;
        EXPECT_EQ(base, c[0] * c[1] * c[2] > 0 ? Valence::kPleasure : Valence::kDispleasure);
        for (int axis = 0; axis < 3; ++axis) {
            auto d = c;
            d[axis] = -d[axis];
            const Valence flipped = classify_octant({d[0], d[1], d[2]}).valence;
            EXPECT_NE(flipped, base);
            EXPECT_NE(flipped, Valence::kNone);
        }
    }
}

TEST(Intensity, Examples) {
    EXPECT_NEAR(intensity({0.8, 0.5, 0.6}), 0.6214465011907718, 1e-12);
    EXPECT_NEAR(intensity({0.8, 0.5, 0.6}), oracle::cube_root(0.24), 1e-12);
    EXPECT_EQ(intensity({0.8, 0.0, 0.6}), 0.0);
    EXPECT_DOUBLE_EQ(intensity({1, 1, 1}), 1.0);
    EXPECT_DOUBLE_EQ(intensity({-1, 1, -1}), 1.0);
    EXPECT_DOUBLE_EQ(intensity({0.3, 0.3, 0.3}, IntensityFormula::kEuclidean), 0.3);
    EXPECT_EQ(intensity({0.3, 0.0, 0.3}, IntensityFormula::kEuclidean), 0.0);
}

TEST(Intensity, BoundedAndMatchesOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 0; n < 2000; ++n) {
        const AxisAssignment v{u(rng), u(rng), u(rng)};
        const double g = intensity(v);
        EXPECT_GE(g, 0.0);
        EXPECT_LE(g, 1.0);
        EXPECT_NEAR(g, oracle::cube_root(std::abs(v.f1 * v.f2 * v.f3)), 1e-12);
        const double e = intensity(v, IntensityFormula::kEuclidean);
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, 1.0);
    }
}

class EgcFrames : public ::testing::Test {
protected:
    void SetUp() override {
        db.upsert("I", 0.5);
        db.upsert("souvenir", 0.7);
        db.upsert("buy", 0.4);
        db.upsert("lose", -0.6);
        db.upsert("souvenir", -0.3, "skeptic");
    }
    FvDatabase db;
};

TEST_F(EgcFrames, AllPositiveIsPleasure) {
    const auto r = egc_evaluate(parse_case_frame("V(S:I, O:souvenir, P:buy)"), db, std::nullopt);
    EXPECT_EQ(r.area, Area::kI);
    EXPECT_EQ(r.valence, Valence::kPleasure);
    EXPECT_NEAR(r.intensity, oracle::cube_root(0.5 * 0.7 * 0.4), 1e-12);
}

TEST_F(EgcFrames, NegativePredicateIsAreaV) {
    const auto r = egc_evaluate(parse_case_frame("V(S:I, O:souvenir, P:lose)"), db, std::nullopt);
    EXPECT_EQ(r.area, Area::kV);
    EXPECT_EQ(r.valence, Valence::kDispleasure);
}

TEST_F(EgcFrames, UnknownSubjectIsNeutral) {
    const auto r = egc_evaluate(parse_case_frame("V(S:stranger, O:souvenir, P:buy)"), db, std::nullopt);
    EXPECT_EQ(r.area, Area::kOnAxis);
    EXPECT_EQ(r.valence, Valence::kNone);
    EXPECT_EQ(r.intensity, 0.0);
}

TEST_F(EgcFrames, PersonaChangesValence) {
    const auto r = egc_evaluate(parse_case_frame("V(S:I, O:souvenir, P:buy)"), db, "skeptic");
    EXPECT_EQ(r.vector.f2, -0.3);
    EXPECT_EQ(r.valence, Valence::kDispleasure);
}
