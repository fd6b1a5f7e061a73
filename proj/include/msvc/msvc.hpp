#pragma once

#include "msvc/graph.hpp"
#include "msvc/io.hpp"
#include "msvc/kernel.hpp"
#include "msvc/mvc_enum.hpp"
#include "msvc/oracles.hpp"
#include "msvc/fpt.hpp"
#include "msvc/analysis.hpp"
#include "msvc/generators.hpp"
