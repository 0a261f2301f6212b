#pragma once

#include "girthlab/census.hpp"
#include "girthlab/error.hpp"
#include "girthlab/families.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/graph6.hpp"
#include "girthlab/isomorphism.hpp"
#include "girthlab/laws.hpp"
#include "girthlab/maps.hpp"
#include "girthlab/multigraph.hpp"
#include "girthlab/multigraph_json.hpp"
#include "girthlab/scheme.hpp"
#include "girthlab/truncation.hpp"
