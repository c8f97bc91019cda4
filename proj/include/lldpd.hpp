#pragma once

#include "lldpd/asymptotics.hpp"
#include "lldpd/commands.hpp"
#include "lldpd/competitors.hpp"
#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/fit.hpp"
#include "lldpd/influence.hpp"
#include "lldpd/ingest.hpp"
#include "lldpd/loglogistic.hpp"
#include "lldpd/optimize.hpp"
#include "lldpd/report.hpp"
#include "lldpd/simulation.hpp"
#include "lldpd/specfun.hpp"
