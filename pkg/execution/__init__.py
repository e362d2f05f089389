# Error models and work-unit execution strategies
