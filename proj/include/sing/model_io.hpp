#pragma once

#include <filesystem>
#include <iosfwd>

#include "sing/sing_core.hpp"

namespace sing {

// Text model dump:
//   line 1  sing-model,1,<M>,<K>,<feature>...,<class>...
//           a categorical feature is written as name[token=code;token=code]
//   line 2  Delta, comma separated, shortest round-trip precision
//   line 3+ label,origin,c_1,...,c_M
void write_model(std::ostream& out, const GroupStore& store);
GroupStore read_model(std::istream& in);

void save_model(const std::filesystem::path& path, const GroupStore& store);
GroupStore load_model(const std::filesystem::path& path);

}  // namespace sing
