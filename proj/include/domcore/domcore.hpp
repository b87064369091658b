#pragma once

#include "domcore/canonical.hpp"
#include "domcore/classify.hpp"
#include "domcore/edge_list.hpp"
#include "domcore/enumerate.hpp"
#include "domcore/error.hpp"
#include "domcore/graph.hpp"
#include "domcore/graph6.hpp"
#include "domcore/mds.hpp"
#include "domcore/recognize.hpp"
#include "domcore/search.hpp"
#include "domcore/vertex_set.hpp"
#include "domcore/verify.hpp"
#include "domcore/witness_file.hpp"
