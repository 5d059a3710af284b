#pragma once

#include "reebop/bubbling.hpp"
#include "reebop/chain_complex.hpp"
#include "reebop/planner.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace reebop::io {

using nlohmann::json;

// schema or syntax failure; `where` is a JSON pointer into the offending
// document, or file:line for raw syntax errors
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& message)
        : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// reads and parses; syntax errors are reported with file and line
json load_json_file(const std::string& filename);

// sorted keys, two-space indent, trailing newline; integers that fit in
// int64 are emitted as numbers, anything larger as a decimal string
std::string dump_canonical(const json& j);

json to_json(const Int& v);
json to_json(const FGAbelianGroup& g);
json to_json(const IntMatrix& m);
json to_json(const ChainComplex& c);
json to_json(const ManifoldProfile& p);
json to_json(const Bouquet& b);
json to_json(const ReebState& w);
json to_json(const TargetFamily& t);
json to_json(const Plan& p);
json to_json(const Verdict& v);
json to_json(const OpLedgerEntry& e);
json to_json(const SourceHomologyReport& r);

Int int_from_json(const json& j, const std::string& path);
FGAbelianGroup group_from_json(const json& j, const std::string& path);
IntMatrix matrix_from_json(const json& j, const std::string& path);
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path);
ChainComplex complex_from_json(const json& j, const std::string& path);
ManifoldProfile profile_from_json(const json& j, const std::string& path);
std::vector<ManifoldProfile> catalog_from_json(const json& j, const std::string& path);
Bouquet bouquet_from_json(const json& j, const std::vector<ManifoldProfile>& catalog,
                          const std::string& path);
OpKind kind_from_json(const json& j, const std::string& path);
ReebState state_from_json(const json& j, const std::string& path);
TargetFamily target_from_json(const json& j, const std::string& path);
Plan plan_from_json(const json& j, const std::vector<ManifoldProfile>& catalog,
                    const std::string& path);
PrimePowerPartition partition_from_json(const json& j, const std::string& path);
SubgroupFamily family_from_json(const json& j, const std::string& path);

}  // namespace reebop::io
