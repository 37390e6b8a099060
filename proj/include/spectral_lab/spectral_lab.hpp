#pragma once

#include "spectral_lab/canonical.hpp"
#include "spectral_lab/descent.hpp"
#include "spectral_lab/enumeration.hpp"
#include "spectral_lab/graph.hpp"
#include "spectral_lab/graph6.hpp"
#include "spectral_lab/graph_json.hpp"
#include "spectral_lab/matchings.hpp"
#include "spectral_lab/result_cache.hpp"
#include "spectral_lab/spectral.hpp"
#include "spectral_lab/symmetric_eigen.hpp"
