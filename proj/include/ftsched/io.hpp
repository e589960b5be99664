#ifndef FTSCHED_IO_HPP
#define FTSCHED_IO_HPP

// JSON encodings. Ids are 1-based and sets are written in ascending order:
//   schedule:  {"N":4,"n":2,"f":1,"sets":[[1,2],[3,4],[3,4],[3,4]]}
//   adversary: {"kills":[1,3,4,4]}
//   instance:  {"n":2,"f":1,"R":4,"adjacency":[[1,2],[3,4]]}

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "adversary_solver.hpp"
#include "errors.hpp"
#include "game.hpp"

namespace ftsched {

using Json = nlohmann::json;

inline Json to_json(const Schedule& s)
{
    Json sets = Json::array();
    for (const auto& set : s.sets) {
        ProcessorSet sorted = set;
        std::sort(sorted.begin(), sorted.end());
        sets.push_back(sorted);
    }
    return Json{{"N", s.params.pool}, {"n", s.params.active}, {"f", s.params.tolerance}, {"sets", sets}};
}

inline Json to_json(const Adversary& a)
{
    return Json{{"kills", a.kills}};
}

inline Json to_json(const PInstance& inst)
{
    Json adjacency = Json::array();
    for (std::size_t l = 0; l < inst.left_size(); ++l) {
        Json row = Json::array();
        for (std::size_t r : inst.graph.adjacent(Side::Left, l)) {
            row.push_back(r + 1);
        }
        adjacency.push_back(row);
    }
    return Json{{"n", inst.active}, {"f", inst.tolerance}, {"R", inst.right_size()}, {"adjacency", adjacency}};
}

namespace detail {

template <typename T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidInput(std::string("field \"") + key + "\" has the wrong type");
    }
}

} // namespace detail

/// Parses a schedule; structural invariants are left to validate_schedule.
inline Schedule schedule_from_json(const Json& j)
{
    Schedule s;
    s.params.pool = detail::field<std::int64_t>(j, "N");
    s.params.active = detail::field<std::int64_t>(j, "n");
    s.params.tolerance = detail::field<std::int64_t>(j, "f");
    s.sets = detail::field<std::vector<ProcessorSet>>(j, "sets");
    return s;
}

inline Adversary adversary_from_json(const Json& j)
{
    return Adversary{detail::field<std::vector<ProcessorId>>(j, "kills")};
}

inline PInstance instance_from_json(const Json& j)
{
    const auto right = detail::field<std::int64_t>(j, "R");
    detail::require(right >= 0, "R must be nonnegative");
    const auto adjacency = detail::field<std::vector<std::vector<std::int64_t>>>(j, "adjacency");
    PInstance inst{BipartiteGraph(adjacency.size(), static_cast<std::size_t>(right)),
                   detail::field<std::int64_t>(j, "n"), detail::field<std::int64_t>(j, "f")};
    for (std::size_t l = 0; l < adjacency.size(); ++l) {
        for (std::int64_t r : adjacency[l]) {
            detail::require(r >= 1 && r <= right, "adjacency id out of range in row " + std::to_string(l + 1));
            inst.graph.add_edge(l, static_cast<std::size_t>(r - 1));
        }
    }
    return inst;
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path);
    }
    out << j.dump() << '\n';
    if (!out) {
        throw InvalidInput("failed writing " + path);
    }
}

} // namespace ftsched

#endif
