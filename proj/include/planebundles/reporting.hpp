#pragma once

#include <string>

#include "planebundles/families.hpp"
#include "planebundles/group.hpp"
#include "planebundles/jumping.hpp"

namespace pb::report {

/// All reports come in two formats: "json" (stable, versioned schema, byte
/// deterministic given seeds) and "text" (human table, no compatibility
/// promise).
bool is_valid_format(const std::string& format);

std::string splitting(const Presentation& p, const std::string& label, const LineP2& line,
                      const std::string& format);

std::string chern_report(const Presentation& p, const std::string& label,
                         const std::string& format);

std::string scan_report(const Presentation& p, const std::string& label, const ScanMode& mode,
                        const std::string& format);

std::string sections_report(const Presentation& p, const std::string& label, long long twist,
                            const std::string& format);

std::string invariance(const Presentation& p, const std::string& label, const SubgroupTag& tag,
                       unsigned samples, std::uint64_t seed, const std::string& format);

std::string invariance_element(const Presentation& p, const std::string& label,
                               const GroupElement& g, std::uint64_t seed,
                               const std::string& format);

std::string isomorphic_report(const Presentation& a, const std::string& label_a,
                              const Presentation& b, const std::string& label_b,
                              std::uint64_t seed, const std::string& format);

}  // namespace pb::report
