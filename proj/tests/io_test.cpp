#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include <ftsched/ftsched.hpp>

namespace ftsched {
namespace {

TEST(ScheduleJson, MatchesDocumentedLayout)
{
    EXPECT_EQ(to_json(trivial_schedule({4, 2, 1})).dump(), R"({"N":4,"f":1,"n":2,"sets":[[1,2],[3,4],[3,4],[3,4]]})");
    EXPECT_EQ(to_json(Adversary{{1, 3, 4, 4}}).dump(), R"({"kills":[1,3,4,4]})");
    EXPECT_EQ(to_json(Schedule{{4, 2, 1}, {{2, 1}}})["sets"].dump(), "[[1,2]]");
}

TEST(ScheduleJson, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        const std::int64_t N = 2 + static_cast<std::int64_t>(rng() % 10);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(N - 1));
        const Schedule s = random_schedule({N, n, 1}, 1 + rng() % static_cast<std::uint64_t>(N), rng());
        EXPECT_EQ(schedule_from_json(Json::parse(to_json(s).dump())), s);
        const Adversary a = minimal_adversary(s);
        EXPECT_EQ(adversary_from_json(Json::parse(to_json(a).dump())), a);
    }
}

TEST(InstanceJson, RoundTrip)
{
    const PInstance inst = instance_from_schedule(trivial_schedule({7, 4, 3}));
    const PInstance back = instance_from_json(Json::parse(to_json(inst).dump()));
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.active, 4);
    EXPECT_EQ(back.tolerance, 3);
}

TEST(Json, ReportsMalformedInput)
{
    EXPECT_THROW(schedule_from_json(Json::parse(R"({"N":4,"n":2})")), InvalidInput);
    EXPECT_THROW(schedule_from_json(Json::parse(R"({"N":4,"n":2,"f":1,"sets":"x"})")), InvalidInput);
    EXPECT_THROW(adversary_from_json(Json::parse("[]")), InvalidInput);
    EXPECT_THROW(instance_from_json(Json::parse(R"({"n":2,"f":1,"R":2,"adjacency":[[3]]})")), InvalidInput);
    EXPECT_THROW(read_json_file("/nonexistent/schedule.json"), InvalidInput);
}

TEST(Json, FileRoundTrip)
{
    const auto path = (std::filesystem::temp_directory_path() / "ftsched_io_test.json").string();
    const Schedule s = trivial_schedule({9, 4, 2});
    write_json_file(path, to_json(s));
    EXPECT_EQ(schedule_from_json(read_json_file(path)), s);
    std::filesystem::remove(path);
}

} // namespace
} // namespace ftsched
