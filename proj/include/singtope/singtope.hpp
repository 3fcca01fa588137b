#pragma once

#include "singtope/arms.hpp"
#include "singtope/canonical.hpp"
#include "singtope/census.hpp"
#include "singtope/classify.hpp"
#include "singtope/definite.hpp"
#include "singtope/error.hpp"
#include "singtope/family.hpp"
#include "singtope/graph.hpp"
#include "singtope/io.hpp"
#include "singtope/laufer.hpp"
