#pragma once

#include "amp/certificate.hpp"
#include "amp/commands.hpp"
#include "amp/config.hpp"
#include "amp/exhaustive.hpp"
#include "amp/genfun.hpp"
#include "amp/group.hpp"
#include "amp/matching.hpp"
#include "amp/poly.hpp"
#include "amp/subset.hpp"
#include "amp/verifier.hpp"
