#pragma once

// Everything except the command-line front end.

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"
#include "foldhom/exponential.hpp"
#include "foldhom/fold.hpp"
#include "foldhom/leveled.hpp"
#include "foldhom/coloring.hpp"
#include "foldhom/perfect.hpp"
#include "foldhom/isomorphism.hpp"
#include "foldhom/complex.hpp"
#include "foldhom/homology.hpp"
#include "foldhom/folded.hpp"
#include "foldhom/certificates.hpp"
#include "foldhom/explicit_coloring.hpp"
#include "foldhom/graph_json.hpp"
#include "foldhom/config.hpp"
#include "foldhom/verdict.hpp"
#include "foldhom/verify.hpp"
#include "foldhom/cache.hpp"
