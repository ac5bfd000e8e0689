#pragma once

#include "chordtd/error.hpp"
#include "chordtd/vertex_set.hpp"
#include "chordtd/graph.hpp"
#include "chordtd/chordal.hpp"
#include "chordtd/permutation.hpp"
#include "chordtd/separations.hpp"
#include "chordtd/nested_set.hpp"
#include "chordtd/treedec.hpp"
#include "chordtd/symmetry.hpp"
#include "chordtd/free_group.hpp"
#include "chordtd/graph_decomposition.hpp"
#include "chordtd/covers.hpp"
#include "chordtd/instances.hpp"
#include "chordtd/pipeline.hpp"
#include "chordtd/io.hpp"
