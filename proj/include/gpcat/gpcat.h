#ifndef GPCAT_GPCAT_H
#define GPCAT_GPCAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpcat_status {
  GPCAT_OK = 0,
  GPCAT_ERR_ARGUMENT = 1,
  GPCAT_ERR_PARSE = 2,
  GPCAT_ERR_VALIDATION = 3,
  GPCAT_ERR_IO = 4,
  GPCAT_ERR_INCONCLUSIVE = 5,
  GPCAT_ERR_INTERNAL = 6
} gpcat_status;

typedef struct gpcat_config gpcat_config;
typedef struct gpcat_report gpcat_report;
typedef struct gpcat_category gpcat_category;

const char* gpcat_version(void);
/* Message of the last failed call on this thread, or "". */
const char* gpcat_last_error(void);

gpcat_config* gpcat_config_new(const char* command);
void gpcat_config_free(gpcat_config* config);
gpcat_status gpcat_config_add_input(gpcat_config* config, const char* path);
/* Keys: kind, cutoff, limit, field, out, and the command options
   functor, degree, x, f, dims, route, dir. */
gpcat_status gpcat_config_set(gpcat_config* config, const char* key, const char* value);

/* Returns the exit code (0 definite, 1 input error, 2 inconclusive) and
   stores a report that the caller releases with gpcat_report_free. */
int gpcat_run(const gpcat_config* config, gpcat_report** report);
const char* gpcat_report_json(const gpcat_report* report);
int gpcat_report_exit_code(const gpcat_report* report);
void gpcat_report_free(gpcat_report* report);

gpcat_status gpcat_category_load(const char* path, gpcat_category** out);
size_t gpcat_category_object_count(const gpcat_category* c);
/* Returns -1 for out-of-range objects. */
long gpcat_category_hom_dim(const gpcat_category* c, size_t x, size_t y);
void gpcat_category_free(gpcat_category* c);

#ifdef __cplusplus
}
#endif

#endif
