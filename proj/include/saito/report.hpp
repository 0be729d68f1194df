#pragma once

#include "json.hpp"
#include "saito/group.hpp"
#include "saito/matrix.hpp"

namespace saito {

using Json = nlohmann::ordered_json;

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// One CLI command's worth of output. Serializes to
// {"schema":1,"group":...,"command":...,"checks":[...],"data":{...}}
// with deterministic key order.
struct Report {
    std::string group;
    std::string command;
    std::vector<CheckResult> checks;
    Json data = Json::object();

    void add_check(std::string id, bool pass, std::string detail = "");
    bool all_pass() const;

    Json to_json() const;
    std::string to_text() const;
};

// Group-spec documents: {"schema":1,"name","rank","variables"?,"invariants","degrees"?}.
// Variables default to u1..un. Invariants are expression strings; they are
// parsed, checked for homogeneity and independence, and must be listed in
// descending degree order.
GroupSpec load_group_spec(const Json& doc);
GroupSpec load_group_spec_file(const std::string& path);
Json group_spec_to_json(const GroupSpec& g);

// Tensors serialize sparsely with 1-based keys "(i,j,k)" meaning the
// coefficient of d/du^k in (d/du^i) * (d/du^j); zero entries are omitted.
// t[i](k, j) is that coefficient.
Json tensor_to_json(const std::vector<RatFnMatrix>& t);
Json matrix_to_json(const RatFnMatrix& m);
Json matrix_to_json(const PolyMatrix& m);

}  // namespace saito
