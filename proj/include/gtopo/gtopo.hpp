#pragma once

#include <gtopo/core.hpp>
#include <gtopo/atlas.hpp>
#include <gtopo/classify.hpp>
#include <gtopo/topology.hpp>
#include <gtopo/naming.hpp>
#include <gtopo/chart.hpp>
#include <gtopo/records.hpp>
#include <gtopo/service.hpp>
