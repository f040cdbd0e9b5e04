#pragma once

#include "digifix/metric.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace digifix::detail {

struct MetricCache {
    std::mutex mutex;
    std::map<std::pair<int, double>, std::shared_ptr<const DistanceTable>> tables;
};

} // namespace digifix::detail
