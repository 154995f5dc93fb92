#pragma once
// Everything except the JSON layer (quatlie/io.hpp, which needs nlohmann/json).

#include "quatlie/bessel.hpp"
#include "quatlie/cayley.hpp"
#include "quatlie/composition.hpp"
#include "quatlie/freudenthal.hpp"
#include "quatlie/jordan.hpp"
#include "quatlie/lie_g.hpp"
#include "quatlie/lie_g3.hpp"
#include "quatlie/lie_h.hpp"
#include "quatlie/lie_m.hpp"
#include "quatlie/linalg.hpp"
#include "quatlie/orthogonal.hpp"
#include "quatlie/rational.hpp"
#include "quatlie/sampling.hpp"
#include "quatlie/scalars.hpp"
#include "quatlie/schmid.hpp"
#include "quatlie/verify.hpp"
#include "quatlie/whittaker.hpp"
