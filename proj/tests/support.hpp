#pragma once

#include "quatlie/sampling.hpp"

namespace quatlie::qtest {
using quatlie::all_descriptor_kinds;
using quatlie::Sampler;
}  // namespace quatlie::qtest
