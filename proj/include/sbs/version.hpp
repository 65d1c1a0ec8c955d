#pragma once

#define SBS_VERSION "0.1.0"
