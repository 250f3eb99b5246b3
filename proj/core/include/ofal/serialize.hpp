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

#pragma once

// JSON encodings of the domain types.
//
// Rationals are strings "p/q" (or "p" for integers). Request and server
// indices are 1-based on disk, 0-based in memory; the conversion happens
// only here.
//
//   instance:  {"servers": ["0", "1"], "capacities": [1, 1]}
//   sequence:  {"requests": ["79/160", "0"], "generator": {"kind": "thm1", "k": 2, "ell": 1, "eps": "1/10"}}
//   matching:  {"pairs": [{"request": 1, "server": 2}]}
//   trace:     {"steps": [{"request": 1, "server": 1, "cost": "79/160", "running_total": "79/160"}],
//               "total": "79/160"}

#include "ofal/adversary.hpp"
#include "ofal/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>

namespace nlohmann {

template <>
struct adl_serializer<ofal::Rational> {
    static void to_json(json& j, const ofal::Rational& q);
    static ofal::Rational from_json(const json& j);
};

template <>
struct adl_serializer<ofal::Instance> {
    static void to_json(json& j, const ofal::Instance& inst);
    static ofal::Instance from_json(const json& j);
};

}  // namespace nlohmann

namespace ofal {

using nlohmann::json;

void to_json(json& j, const RequestSequence& seq);
void from_json(const json& j, RequestSequence& seq);

void to_json(json& j, const Matching& m);
void from_json(const json& j, Matching& m);

void to_json(json& j, const Trace& trace);
/// Rebuilds the trace and checks that totals and running totals add up.
void from_json(const json& j, Trace& trace);

void to_json(json& j, const GeneratorInfo& info);
void from_json(const json& j, GeneratorInfo& info);

/// A sequence file: requests plus optional generator provenance.
struct SequenceFile {
    RequestSequence sequence;
    std::optional<GeneratorInfo> generator;
};

json sequence_file_json(const SequenceFile& file);
SequenceFile parse_sequence_file(const json& j);

/// Throws ValidationError when the file cannot be read or parsed.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace ofal
