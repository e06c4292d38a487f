#include "ringprob/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

StructureConstants empty_constants(std::vector<Index> moduli) {
  const std::size_t k = moduli.size();
  StructureConstants sc{std::move(moduli), {}};
  sc.products.assign(k * k, std::vector<Index>(k, 0));
  return sc;
}

void set_unit(StructureConstants& sc, std::size_t i, std::size_t j, std::size_t t) {
  sc.products[i * sc.rank() + j][t] = 1;
}

Index param_or(std::span<const std::uint64_t> params, std::string_view name) {
  if (params.size() != 1)
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " takes exactly one parameter");
  if (params[0] < 2 || params[0] > (1U << 16))
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " parameter must be >= 2");
  return static_cast<Index>(params[0]);
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Builtin: return "builtin";
    case Provenance::File: return "file";
    case Provenance::Generated: return "generated";
  }
  return "unknown";
}

FiniteRing builtin(std::string_view name, std::span<const std::uint64_t> params,
                   const BuildOptions& options) {
  if (name == "zn") {
    auto sc = empty_constants({param_or(params, name)});
    set_unit(sc, 0, 0, 0);
    return FiniteRing::from_structure_constants(sc, options);
  }
  if (name == "nc4a") {
    if (!params.empty()) throw Error(ErrorKind::InvalidArgument, "nc4a takes no parameters");
    const std::uint64_t two[] = {2};
    return builtin("row2", two, options);
  }
  if (name == "row2") {
    // e1 e1 = e1, e1 e2 = e2
    auto sc = empty_constants({param_or(params, name), param_or(params, name)});
    set_unit(sc, 0, 0, 0);
    set_unit(sc, 0, 1, 1);
    return FiniteRing::from_structure_constants(sc, options);
  }
  if (name == "ut2") {
    // basis E11, E12, E22
    const Index n = param_or(params, name);
    auto sc = empty_constants({n, n, n});
    set_unit(sc, 0, 0, 0);
    set_unit(sc, 0, 1, 1);
    set_unit(sc, 1, 2, 1);
    set_unit(sc, 2, 2, 2);
    return FiniteRing::from_structure_constants(sc, options);
  }
  if (name == "m2") {
    // basis E11, E12, E21, E22; E_ij E_jl = E_il
    const Index n = param_or(params, name);
    auto sc = empty_constants({n, n, n, n});
    auto at = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) set_unit(sc, at(i, j), at(j, l), at(i, l));
    return FiniteRing::from_structure_constants(sc, options);
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
}

FiniteRing builtin_from_spec(std::string_view spec, const BuildOptions& options) {
  if (spec.empty()) throw Error(ErrorKind::UnknownBuiltin, "empty builtin spec");
  const auto star = spec.find('*');
  if (star != std::string_view::npos) {
    const auto left = builtin_from_spec(spec.substr(0, star), options);
    const auto right = builtin_from_spec(spec.substr(star + 1), options);
    return direct_product(left, right, options);
  }
  std::vector<std::uint64_t> params;
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto next = rest.find(':');
      const auto token = rest.substr(0, next);
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorKind::InvalidArgument, "bad builtin parameter '" + std::string(token) + "'");
      params.push_back(v);
      if (next == std::string_view::npos) break;
      rest = rest.substr(next + 1);
    }
  }
  return builtin(name, params, options);
}

void Catalog::add(CatalogEntry entry) {
  if (find(entry.name) != nullptr)
    throw Error(ErrorKind::InvalidArgument, "duplicate catalog name '" + entry.name + "'");
  entries_.push_back(std::move(entry));
}

void Catalog::add_builtin(std::string_view spec, const BuildOptions& options) {
  add({std::string(spec), share(builtin_from_spec(spec, options)), Provenance::Builtin, {}});
}

const CatalogEntry* Catalog::find(std::string_view name) const noexcept {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ringprob
