#include "gcrystal/serialize.hpp"
#include "gcrystal/suites.hpp"

#include <gtest/gtest.h>

using namespace gcrystal;

TEST(PointJson, RoundTrip)
{
    Sampler rng{5};
    const Shape s{4, 2};
    const auto x = sample_point<XPoint>(s, rng, 9);
    EXPECT_EQ(point_from_json<XPoint>(to_json(x)), x);
    const auto y = sample_point<YPoint>(s, rng, 9);
    EXPECT_EQ(point_from_json<YPoint>(to_json(y)), y);
    const auto t = sample_point<TropPoint>(s, rng, 9);
    EXPECT_EQ(point_from_json<TropPoint>(to_json(t)), t);
    const auto b = sample_belement(s, rng, 6);
    EXPECT_EQ(belement_from_json(to_json(b)), b);
}

TEST(PointJson, Format)
{
    XPoint x{Shape{2, 1}};
    x.set(1, 1, make_rational(2));
    x.set(1, 2, make_rational(3, 6));
    EXPECT_EQ(to_json(x).dump(), R"({"entries":{"1,1":"2/1","1,2":"1/2"},"k":1,"kind":"x","n":2})");
}

TEST(PointJson, Rejections)
{
    const auto ok = Json::parse(R"({"n":2,"k":1,"kind":"x","entries":{"1,1":"2/1","1,2":"3/1"}})");
    EXPECT_NO_THROW(point_from_json<XPoint>(ok));
    auto bad = ok;
    bad["entries"]["1,1"] = "-2/1";
    EXPECT_THROW(point_from_json<XPoint>(bad), ValidationError);
    bad = ok;
    bad["entries"].erase("1,2");
    EXPECT_THROW(point_from_json<XPoint>(bad), ValidationError);
    bad = ok;
    bad["entries"]["2,1"] = "1/1";
    EXPECT_THROW(point_from_json<XPoint>(bad), ValidationError);
    bad = ok;
    bad["entries"]["1,1"] = "2/0";
    EXPECT_THROW(point_from_json<XPoint>(bad), ValidationError);
    bad = ok;
    bad["kind"] = "y";
    EXPECT_THROW(point_from_json<XPoint>(bad), ValidationError);
    bad = ok;
    bad["k"] = 0;
    EXPECT_THROW(object_from_json(bad), ValidationError);
    EXPECT_THROW(object_from_json(Json::parse(R"({"n":2,"k":1,"kind":"b","entries":{"1,1":1,"1,2":0,"1,3":0}})")),
                 ValidationError);
}

TEST(Reports, DeterministicModuloWallTime)
{
    const Shape s{3, 2};
    for (const auto& info : suite_registry()) {
        const auto a = run_suite(info.name, s, 2, 11).to_json(false).dump();
        const auto b = run_suite(info.name, s, 2, 11).to_json(false).dump();
        EXPECT_EQ(a, b) << info.name;
    }
}

TEST(Reports, WitnessRecorded)
{
    RunReport rep{"demo", Shape{2, 1}, 1, 1};
    rep.record("always", true, [] { return Json{}; });
    for (int i = 0; i < 5; ++i) {
        rep.record("never", false, [i] { return Json{{"i", i}}; });
    }
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.checks().at("never").failed, 5u);
    EXPECT_EQ(rep.checks().at("never").witnesses.size(), max_witnesses);
    EXPECT_EQ(rep.to_json(false)["checks"]["never"]["witnesses"][0]["i"], 0);
}
