#pragma once

#include "cyclemagic/build.hpp"
#include "cyclemagic/certificate.hpp"
#include "cyclemagic/cycles.hpp"
#include "cyclemagic/dot.hpp"
#include "cyclemagic/family.hpp"
#include "cyclemagic/graph.hpp"
#include "cyclemagic/labelers.hpp"
#include "cyclemagic/labeling.hpp"
#include "cyclemagic/search.hpp"
#include "cyclemagic/verify.hpp"
#include "cyclemagic/version.hpp"
