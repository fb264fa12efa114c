#pragma once

#include "nilrigid/algebra_json.hpp"
#include "nilrigid/catalog.hpp"
#include "nilrigid/clifford.hpp"
#include "nilrigid/jsquared.hpp"
#include "nilrigid/rigidity.hpp"

namespace nilrigid {

// JSON documents emitted by the command-line tool. Field names are stable;
// see docs/schemas.md.

Json to_json(std::span<const GaussRat> v);  // {"re": [...], "im": [...]}

Json prolongation_to_json(const ProlongationResult& p);
Json verdict_to_json(const RigidityVerdict& v);
Json j2_to_json(const J2Verdict& v);
Json forall_to_json(const ForallWitness& w);
Json generators_to_json(const CliffordRep& rep);
Json htype_generators_to_json(std::size_t r, std::size_t s, const HTypeAlgebra& h);
Json table1_to_json(const std::vector<Table1Entry>& entries, std::size_t max_dim);
Json involutions_to_json(std::size_t r, std::size_t s, const InvolutionSet& inv);
Json catalog_entry_to_json(const CatalogEntry& e);
Json sample_to_json(std::size_t m, std::size_t n, std::uint64_t seed, const SampleReport& rep);

}  // namespace nilrigid
