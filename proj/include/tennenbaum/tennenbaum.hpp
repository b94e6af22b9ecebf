#pragma once

#include "core.hpp"
#include "descent.hpp"
#include "geometry.hpp"
#include "render.hpp"
#include "search.hpp"
