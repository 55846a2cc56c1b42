#pragma once

#include "certificate.hpp"
#include "coefficient_table.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "fpt.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "parallel.hpp"
#include "partization.hpp"
#include "recog3.hpp"
#include "split.hpp"
#include "structure.hpp"
#include "tds.hpp"
#include "vertex_set.hpp"
