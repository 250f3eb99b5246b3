// Copyright 2026 The ofal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ofal/serialize.hpp"

#include "ofal/error.hpp"

#include <fstream>

namespace nlohmann {

void adl_serializer<ofal::Rational>::to_json(json& j, const ofal::Rational& q)
{
    j = ofal::format_rational(q);
}

ofal::Rational adl_serializer<ofal::Rational>::from_json(const json& j)
{
    if (j.is_number_integer())
        return ofal::Rational(j.get<long long>());
    if (!j.is_string())
        throw ofal::ValidationError("rational must be a \"p/q\" string, got " + j.dump());
    return ofal::parse_rational(j.get<std::string>());
}

void adl_serializer<ofal::Instance>::to_json(json& j, const ofal::Instance& inst)
{
    j = json{{"servers", inst.servers()}, {"capacities", inst.capacities()}};
}

ofal::Instance adl_serializer<ofal::Instance>::from_json(const json& j)
{
    return ofal::Instance(j.at("servers").get<std::vector<ofal::Rational>>(),
                          j.at("capacities").get<std::vector<int>>());
}

}  // namespace nlohmann

namespace ofal {

namespace {

std::size_t one_based(const json& j, const char* field)
{
    const auto v = j.at(field).get<long long>();
    if (v < 1)
        throw ValidationError(std::string(field) + " index must be >= 1, got " + std::to_string(v));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

void to_json(json& j, const RequestSequence& seq)
{
    j = json{{"requests", seq.requests}};
}

void from_json(const json& j, RequestSequence& seq)
{
    seq.requests = j.at("requests").get<std::vector<Rational>>();
}

void to_json(json& j, const Matching& m)
{
    json pairs = json::array();
    for (const Pair& p : m.pairs)
        pairs.push_back({{"request", p.request + 1}, {"server", p.server + 1}});
    j = json{{"pairs", std::move(pairs)}};
}

void from_json(const json& j, Matching& m)
{
    m.pairs.clear();
    for (const json& p : j.at("pairs"))
        m.pairs.push_back(Pair{one_based(p, "request"), one_based(p, "server")});
}

void to_json(json& j, const Trace& trace)
{
    json steps = json::array();
    Rational running = 0;
    for (const Step& s : trace.steps()) {
        running += s.cost;
        steps.push_back({{"request", s.request + 1},
                         {"server", s.server + 1},
                         {"cost", s.cost},
                         {"running_total", running}});
    }
    j = json{{"steps", std::move(steps)}, {"total", trace.total()}};
}

void from_json(const json& j, Trace& trace)
{
    trace = Trace{};
    for (const json& s : j.at("steps")) {
        trace.append(one_based(s, "request"), one_based(s, "server"), s.at("cost").get<Rational>());
        if (s.contains("running_total") && s.at("running_total").get<Rational>() != trace.total())
            throw ValidationError("trace running_total disagrees with the step costs");
    }
    if (j.at("total").get<Rational>() != trace.total())
        throw ValidationError("trace total disagrees with the sum of step costs");
}

void to_json(json& j, const GeneratorInfo& info)
{
    j = json{{"kind", info.kind}, {"k", info.k}, {"ell", info.ell}};
    if (info.eps)
        j["eps"] = *info.eps;
    if (info.seed)
        j["seed"] = *info.seed;
    if (info.lo)
        j["lo"] = *info.lo;
    if (info.hi)
        j["hi"] = *info.hi;
}

void from_json(const json& j, GeneratorInfo& info)
{
    info = GeneratorInfo{};
    info.kind = j.at("kind").get<std::string>();
    info.k = j.at("k").get<int>();
    info.ell = j.value("ell", 1);
    if (j.contains("eps"))
        info.eps = j.at("eps").get<Rational>();
    if (j.contains("seed"))
        info.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("lo"))
        info.lo = j.at("lo").get<Rational>();
    if (j.contains("hi"))
        info.hi = j.at("hi").get<Rational>();
}

json sequence_file_json(const SequenceFile& file)
{
    json j = file.sequence;
    if (file.generator)
        j["generator"] = *file.generator;
    return j;
}

SequenceFile parse_sequence_file(const json& j)
{
    SequenceFile file{j.get<RequestSequence>(), std::nullopt};
    if (j.contains("generator"))
        file.generator = j.at("generator").get<GeneratorInfo>();
    return file;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace ofal
