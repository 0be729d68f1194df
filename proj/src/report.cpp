#include "saito/report.hpp"

#include <fstream>
#include <sstream>

#include "saito/parser.hpp"

namespace saito {

void Report::add_check(std::string id, bool pass, std::string detail) {
    checks.push_back({std::move(id), pass, std::move(detail)});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json doc;
    doc["schema"] = 1;
    doc["group"] = group;
    doc["command"] = command;
    doc["checks"] = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["id"] = c.id;
        j["status"] = c.pass ? "pass" : "fail";
        j["detail"] = c.detail;
        doc["checks"].push_back(j);
    }
    doc["data"] = data;
    return doc;
}

namespace {

void render_text(std::ostream& os, const Json& j, int indent) {
    std::string pad(2 * indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(os, v, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(os, v, indent + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << command << " " << group << "\n";
    for (const auto& c : checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id
           << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!data.empty()) render_text(os, data, 1);
    return os.str();
}

GroupSpec load_group_spec(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("group spec must be a JSON object");
    if (doc.contains("schema") && doc["schema"] != 1)
        throw std::invalid_argument("unsupported group spec schema version");
    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        throw std::invalid_argument("group spec needs an integer rank");
    int rank = doc["rank"].get<int>();
    if (rank <= 0) throw std::invalid_argument("rank must be positive");

    std::string name = doc.value("name", "custom");
    std::vector<std::string> vars;
    if (doc.contains("variables")) {
        vars = doc["variables"].get<std::vector<std::string>>();
    } else {
        for (int i = 1; i <= rank; ++i) vars.push_back("u" + std::to_string(i));
    }

    if (!doc.contains("invariants") || !doc["invariants"].is_array())
        throw std::invalid_argument("group spec needs an invariant list");
    std::vector<Poly> invs;
    for (const auto& s : doc["invariants"]) invs.push_back(parse_poly(s.get<std::string>(), vars));

    std::optional<std::vector<int>> degrees;
    if (doc.contains("degrees")) degrees = doc["degrees"].get<std::vector<int>>();

    return validate_group(std::move(name), rank, std::move(vars), std::move(invs), degrees);
}

GroupSpec load_group_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group spec file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return load_group_spec(doc);
}

Json group_spec_to_json(const GroupSpec& g) {
    Json doc;
    doc["schema"] = 1;
    doc["name"] = g.name;
    doc["rank"] = g.rank;
    doc["variables"] = g.variables;
    Json invs = Json::array();
    for (const Poly& p : g.invariants) invs.push_back(p.to_string());
    doc["invariants"] = invs;
    doc["degrees"] = g.degrees;
    if (g.codegrees) doc["codegrees"] = *g.codegrees;
    return doc;
}

Json tensor_to_json(const std::vector<RatFnMatrix>& t) {
    Json out = Json::object();
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t[i].cols(); ++j)
            for (size_t k = 0; k < t[i].rows(); ++k) {
                const RatFn& v = t[i].at(k, j);
                if (v.is_zero()) continue;
                std::string key = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ")";
                out[key] = v.to_string();
            }
    return out;
}

Json matrix_to_json(const RatFnMatrix& m) {
    Json out = Json::object();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            out["(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"] = m.at(i, j).to_string();
        }
    return out;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json out = Json::object();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            out["(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"] = m.at(i, j).to_string();
        }
    return out;
}

}  // namespace saito
